#pragma once

#include <string_view>

#include "indseq/graph.hpp"

namespace indseq {

// Builder expressions name graphs on the command line:
//
//   expr  := name '(' arg {',' arg} ')' | short
//   arg   := integer | expr
//   short := K<n> | P<n> | C<n> | E<n> | S<n>
//
// with names path, cycle, complete, empty, star (one integer),
// complete_bipartite (two integers), union and join (two or more
// expressions, folded left). K4 is complete(4), P5 path(5), C5 cycle(5),
// E3 empty(3), S6 star(6).
// Example: join(union(K4,K4,K4),K37).
//
// Malformed text throws ParseError; well-formed but invalid sizes throw
// PreconditionError from the builders.
Graph parse_builder(std::string_view expression);

// True when the text starts like a builder expression rather than graph6.
bool looks_like_builder(std::string_view text);

// Builder expression if it looks like one, graph6 otherwise.
Graph parse_graph_text(std::string_view text);

}  // namespace indseq
