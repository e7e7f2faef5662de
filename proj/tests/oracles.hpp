#pragma once

// Independent brute-force references used only by the tests. None of these
// share code paths with the library routines they check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "indseq/bipartite_bounds.hpp"
#include "indseq/canonical.hpp"
#include "indseq/graph.hpp"
#include "indseq/ind_poly.hpp"

namespace oracle {

using indseq::BigInt;
using indseq::Graph;
using indseq::Rational;

// i_t(G) by scanning all 2^n subsets (n <= 24 or so).
inline std::vector<BigInt> subset_sequence(const Graph& g) {
  const int n = g.order();
  std::vector<unsigned long> counts(n + 1, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool independent = true;
    for (std::uint64_t r = s; r && independent; r &= r - 1) {
      if (g.neighbors(std::countr_zero(r)) & s) independent = false;
    }
    if (independent) ++counts[std::popcount(s)];
  }
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return {counts.begin(), counts.end()};
}

// Pascal's triangle, no GMP binomial.
inline BigInt pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<BigInt> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<BigInt> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  return row[k];
}

// Largest labeled code over all n! relabelings (n <= 7).
inline std::vector<bool> brute_force_max_code(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) code.push_back(g.adjacent(perm[i], perm[j]));
    }
    if (best.empty() || best < code) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic_brute_force(const Graph& a, const Graph& b) {
  return a.order() == b.order() &&
         brute_force_max_code(a) == brute_force_max_code(b);
}

// All labeled graphs on n vertices (n <= 5).
inline std::vector<Graph> all_labeled_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<indseq::Edge> edges;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if ((mask >> p) & 1) edges.push_back(pairs[p]);
    }
    out.emplace_back(n, edges);
  }
  return out;
}

// Unlabeled classes on n vertices via brute-force dedup of all labeled graphs.
inline std::vector<std::vector<bool>> brute_force_classes(int n, int delta) {
  std::vector<std::vector<bool>> codes;
  for (const Graph& g : all_labeled_graphs(n)) {
    if (indseq::min_degree(g) < delta) continue;
    codes.push_back(brute_force_max_code(g));
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

// K(G) straight from the definition: try every pair of k-subsets.
inline std::optional<int> subset_K(const indseq::BipartiteGraph& b) {
  const int n = b.side();
  for (int k = 1; k <= n; ++k) {
    bool all_joined = true;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n) && all_joined; ++a) {
      if (std::popcount(a) != k) continue;
      for (std::uint64_t o = 0; o < (std::uint64_t{1} << n); ++o) {
        if (std::popcount(o) != k) continue;
        bool edge = false;
        for (int u = 0; u < n; ++u) {
          if (((a >> u) & 1) && (b.rows()[u] & o)) edge = true;
        }
        if (!edge) {
          all_joined = false;
          break;
        }
      }
    }
    if (all_joined) return k;
  }
  return std::nullopt;
}

// m(k, G) from the definition, both sides.
inline int subset_m(const indseq::BipartiteGraph& b, int k) {
  const int n = b.side();
  int best = 0;
  for (int side = 0; side < 2; ++side) {
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
      if (std::popcount(a) != k) continue;
      int uncovered = 0;
      for (int v = 0; v < n; ++v) {
        bool hit = false;
        for (int u = 0; u < n; ++u) {
          if (!((a >> u) & 1)) continue;
          if (side == 0 ? b.adjacent(u, v) : b.adjacent(v, u)) hit = true;
        }
        if (!hit) ++uncovered;
      }
      best = std::max(best, uncovered);
    }
  }
  return best;
}

// x(t) from its defining ratio sum C(n,k) C(m(k), t-k) / C(n,t).
inline Rational defining_ratio_x(const indseq::BoundProfile& p, int t) {
  const int cap = p.K ? std::min(*p.K, t / 2) : t / 2;
  Rational sum = 0;
  for (int k = 1; k <= cap; ++k) {
    sum += Rational(pascal(p.n, k) * pascal(p.m_at(k), t - k), pascal(p.n, t));
  }
  sum.canonicalize();
  return sum;
}

// Fibonacci numbers F_1 = F_2 = 1.
inline BigInt fibonacci(int k) {
  BigInt a = 0;
  BigInt b = 1;
  for (int i = 0; i < k; ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return a;
}

}  // namespace oracle
