#pragma once

#include <json.hpp>
#include <string>

#include "indseq/bipartite_bounds.hpp"
#include "indseq/experiment.hpp"
#include "indseq/extremal.hpp"
#include "indseq/graph.hpp"
#include "indseq/ind_poly.hpp"
#include "indseq/seq_analysis.hpp"

namespace indseq {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "indseq/1";

// Exact rationals travel as "p/q" strings (q = 1 included).
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& text);  // ParseError

Json to_json(const CoeffSeq& seq);  // array of decimal strings
CoeffSeq coeffs_from_json(const Json& j);

Json to_json(const SeqVerdict& v);

// {"n": n, "rows": ["0x..", ...]}, row u = O-neighbours of e_u.
Json to_json(const BipartiteGraph& b);
BipartiteGraph bipartite_from_json(const Json& j);

Json to_json(const BoundProfile& p);
BoundProfile profile_from_json(const Json& j);

Json to_json(const SandwichReport& r);
Json to_json(const PropertyReport& r);
Json to_json(const ExtremalReport& r);
Json to_json(const ConjectureProbe& p);
Json to_json(const Threshold& t);

// Config, per-sample records and rates; the worker count is left out so
// the output is the same for any number of workers.
Json to_json(const ExperimentResult& r);
// One header line plus one line per sample.
std::string to_csv(const ExperimentResult& r);

std::string high_to_string(const HighReal& v, int digits = 20);

// Parses text as JSON, rethrowing syntax errors as ParseError.
Json parse_json(const std::string& text);

}  // namespace indseq
