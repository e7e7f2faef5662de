#pragma once

#include <string>
#include <string_view>

#include "indseq/graph.hpp"

namespace indseq {

// Standard graph6 (McKay). An optional ">>graph6<<" header and surrounding
// whitespace are accepted on input. Throws ParseError.
Graph read_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

}  // namespace indseq
