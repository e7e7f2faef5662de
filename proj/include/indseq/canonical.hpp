#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "indseq/graph.hpp"

namespace indseq {

// Certificate of an unlabeled graph: byte 0 is n, followed by the
// upper-triangle adjacency bits (pairs (i, j), i < j, i-major) of the
// canonically relabeled graph, packed MSB first.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

inline constexpr int kMaxCanonicalOrder = 16;

// Upper-triangle code of g under its current labeling (no canonicalisation).
CanonicalCode labeled_code(const Graph& g);

// Inverse of labeled_code.
Graph graph_from_code(const CanonicalCode& code);

// Permutation `perm` (vertex v -> perm[v]) such that g.relabel(perm) is the
// canonical form. Throws PreconditionError when n > 16.
std::vector<int> canonical_labeling(const Graph& g);

Graph canonical_form(const Graph& g);

// Equal iff the graphs are isomorphic.
CanonicalCode canonical(const Graph& g);

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept;
};

}  // namespace indseq
