#include "indseq/json_io.hpp"

#include <cstdio>
#include <sstream>

#include "indseq/errors.hpp"

namespace indseq {

std::string rational_to_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw ParseError("not a rational: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

Json to_json(const CoeffSeq& seq) { return Json(seq.to_strings()); }

CoeffSeq coeffs_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("coefficients must be a JSON array");
  std::vector<std::string> digits;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError("coefficients must be decimal strings");
    digits.push_back(e.get<std::string>());
  }
  return CoeffSeq::from_strings(digits);
}

Json to_json(const SeqVerdict& v) {
  Json j;
  j["unimodal"] = v.unimodal;
  j["modes"] = v.modes;
  j["logconcave_from"] = v.logconcave_from;
  j["increasing_prefix_len"] = v.increasing_prefix_len;
  j["decreasing_from_final_third"] = v.decreasing_from_final_third;
  return j;
}

Json to_json(const BipartiteGraph& b) {
  Json rows = Json::array();
  for (VertexSet r : b.rows()) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(r));
    rows.push_back(buf);
  }
  Json j;
  j["n"] = b.side();
  j["rows"] = std::move(rows);
  return j;
}

BipartiteGraph bipartite_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("rows") ||
      !j["n"].is_number_integer() || !j["rows"].is_array()) {
    throw ParseError("bipartite graph JSON needs integer 'n' and array 'rows'");
  }
  std::vector<VertexSet> rows;
  for (const auto& r : j["rows"]) {
    if (!r.is_string()) throw ParseError("rows must be hex strings");
    std::string s = r.get<std::string>();
    if (s.starts_with("0x") || s.starts_with("0X")) s = s.substr(2);
    if (s.empty() || s.size() > 16 ||
        s.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos) {
      throw ParseError("bad hex row '" + r.get<std::string>() + "'");
    }
    rows.push_back(std::stoull(s, nullptr, 16));
  }
  return BipartiteGraph(j["n"].get<int>(), std::move(rows));
}

Json to_json(const BoundProfile& p) {
  Json j;
  j["n"] = p.n;
  j["K"] = p.K ? Json(*p.K) : Json(nullptr);
  j["m"] = p.m;
  Json x = Json::array();
  for (const auto& v : p.x) x.push_back(rational_to_string(v));
  j["x"] = std::move(x);
  return j;
}

BoundProfile profile_from_json(const Json& j) {
  try {
    BoundProfile p;
    p.n = j.at("n").get<int>();
    if (!j.at("K").is_null()) p.K = j.at("K").get<int>();
    p.m = j.at("m").get<std::vector<int>>();
    for (const auto& x : j.at("x")) p.x.push_back(rational_from_string(x.get<std::string>()));
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bound profile JSON: ") + e.what());
  }
}

Json to_json(const SandwichReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json e;
    e["t"] = row.t;
    e["count"] = row.count.get_str();
    e["lower"] = row.lower.get_str();
    e["upper"] = rational_to_string(row.upper);
    e["lower_ok"] = row.lower_ok;
    e["upper_ok"] = row.upper_ok;
    rows.push_back(std::move(e));
  }
  Json j;
  j["holds"] = r.holds;
  j["sequence"] = to_json(r.sequence);
  j["rows"] = std::move(rows);
  return j;
}

Json to_json(const PropertyReport& r) {
  Json j;
  j["p"] = r.p;
  j["d"] = r.d;
  j["k_limit"] = r.k_limit;
  j["k_bound"] = r.k_bound;
  j["m_bound"] = r.m_bound;
  j["connected"] = r.connected;
  j["m_at_most_n_minus_k"] = r.m_at_most_n_minus_k;
  return j;
}

Json to_json(const ExtremalReport& r) {
  Json j;
  j["n"] = r.n;
  j["delta"] = r.delta;
  j["objective"] = r.objective.describe();
  j["classes"] = r.classes;
  j["max_value"] = rational_to_string(r.max_value);
  j["maximizers"] = r.maximizer_graph6;
  j["unique"] = r.unique;
  j["kdn_in_family"] = r.kdn_in_family;
  j["kdn_is_max"] = r.kdn_is_max;
  j["kdn_value"] = r.kdn_in_family ? Json(rational_to_string(r.kdn_value)) : Json(nullptr);
  return j;
}

Json to_json(const ConjectureProbe& p) {
  Json rows = Json::array();
  for (const auto& row : p.rows) {
    Json e;
    e["n"] = row.n;
    e["kdn_value"] = rational_to_string(row.kdn_value);
    e["max_value"] = rational_to_string(row.max_value);
    e["counterexample"] = row.counterexample;
    e["kdn_unique"] = row.kdn_unique;
    e["ties"] = row.ties;
    rows.push_back(std::move(e));
  }
  Json j;
  j["delta"] = p.delta;
  j["reached"] = p.reached;
  j["any_counterexample"] = p.any_counterexample;
  j["rows"] = std::move(rows);
  return j;
}

std::string high_to_string(const HighReal& v, int digits) {
  std::ostringstream out;
  out.precision(digits);
  out << v;
  return out.str();
}

Json to_json(const Threshold& t) {
  Json j;
  j["x"] = rational_to_string(t.x);
  j["C_x"] = high_to_string(t.c_x);
  j["D_x"] = high_to_string(t.d_x);
  return j;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace indseq

namespace indseq {

namespace {

Json optional_bool(const std::optional<bool>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const ExperimentResult& r) {
  Json config;
  config["n"] = r.config.n;
  config["p_spec"] = r.config.p.describe();
  config["p"] = r.p;
  config["samples"] = r.config.samples;
  config["seed"] = r.config.seed;
  config["exact"] = r.exact;
  config["budget_nodes"] = r.config.count.node_budget;
  config["prefix_target"] = r.prefix_target;

  Json samples = Json::array();
  for (const auto& s : r.samples) {
    Json e;
    e["stream"] = s.stream;
    e["edges"] = s.edges;
    e["K"] = s.K ? Json(*s.K) : Json(nullptr);
    e["x_min"] = rational_to_string(s.x_min);
    e["x_max"] = rational_to_string(s.x_max);
    e["unimodality_threshold_all"] = s.unimodality_threshold_all;
    e["logconcavity_threshold_all"] = s.logconcavity_threshold_all;
    if (s.sequence) {
      e["sequence"] = to_json(*s.sequence);
      e["verdict"] = to_json(*s.verdict);
      e["mode_at_floor_half"] = s.mode_at_floor_half;
      e["mode_at_ceil_half"] = s.mode_at_ceil_half;
      e["sandwich"] = optional_bool(s.sandwich);
    }
    e["properties"] = s.properties ? to_json(*s.properties) : Json(nullptr);
    samples.push_back(std::move(e));
  }

  Json rates = Json::object();
  for (const auto& rate : r.rates) {
    Json e;
    e["holding"] = rate.holding;
    e["applicable"] = rate.applicable;
    e["rate"] = rate.applicable ? Json(static_cast<double>(rate.holding) / rate.applicable)
                                : Json(nullptr);
    rates[rate.name] = std::move(e);
  }

  Json j;
  j["schema"] = kSchema;
  j["command"] = "random";
  j["config"] = std::move(config);
  j["samples"] = std::move(samples);
  j["aggregate"] = std::move(rates);
  return j;
}

std::string to_csv(const ExperimentResult& r) {
  std::ostringstream out;
  out << "stream,edges,K,x_min,x_max,unimodality_threshold_all,"
         "logconcavity_threshold_all,sequence,unimodal,modes,logconcave_from,"
         "increasing_prefix_len,mode_at_half,sandwich,k_bound,m_bound,connected,"
         "m_at_most_n_minus_k\n";
  auto flag = [](bool b) { return b ? "1" : "0"; };
  for (const auto& s : r.samples) {
    out << s.stream << ',' << s.edges << ',' << (s.K ? std::to_string(*s.K) : "")
        << ',' << rational_to_string(s.x_min) << ',' << rational_to_string(s.x_max)
        << ',' << flag(s.unimodality_threshold_all) << ','
        << flag(s.logconcavity_threshold_all) << ',';
    if (s.sequence) {
      std::string seq;
      for (const auto& c : s.sequence->to_strings()) seq += (seq.empty() ? "" : " ") + c;
      std::string modes;
      for (auto m : s.verdict->modes) modes += (modes.empty() ? "" : " ") + std::to_string(m);
      out << seq << ',' << flag(s.verdict->unimodal) << ',' << modes << ','
          << s.verdict->logconcave_from << ',' << s.verdict->increasing_prefix_len
          << ',' << flag(s.mode_at_floor_half || s.mode_at_ceil_half) << ','
          << flag(*s.sandwich) << ',';
    } else {
      out << ",,,,,,,";
    }
    if (s.properties) {
      out << flag(s.properties->k_bound) << ',' << flag(s.properties->m_bound) << ','
          << flag(s.properties->connected) << ','
          << flag(s.properties->m_at_most_n_minus_k);
    } else {
      out << ",,,";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace indseq
