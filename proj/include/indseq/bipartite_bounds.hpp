#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "indseq/graph.hpp"
#include "indseq/ind_poly.hpp"

namespace indseq {

struct BoundOptions {
  // Search nodes per subset optimisation before BudgetExceeded.
  std::uint64_t node_budget = 50'000'000;
};

// K(G): smallest k such that every k-subset of E and every k-subset of O
// are joined by an edge; nullopt when no k <= n works (e.g. no edges).
std::optional<int> compute_K(const BipartiteGraph& b,
                             const BoundOptions& options = {});

// m(k, G): largest number of vertices on one side left undominated by a
// k-subset of the other side, maximised over both sides. 1 <= k <= n.
int compute_m(const BipartiteGraph& b, int k, const BoundOptions& options = {});

struct BoundProfile {
  int n = 0;
  std::optional<int> K;
  // m[k - 1] = m(k, G) for k = 1..n (only k <= K enters x(t)).
  std::vector<int> m;
  // x[t] for t = 0..n.
  std::vector<Rational> x;

  int m_at(int k) const { return m[k - 1]; }
};

BoundProfile make_profile(const BipartiteGraph& b,
                          const BoundOptions& options = {});

// x(t) = sum_{k=1}^{min(K, floor(t/2))} C(t,k) (m(k))_(t-k) / (n-k)_(t-k),
// with K = nullopt read as "no cap". Computed from n, K and m alone.
// Defined for 0 <= t <= n (the falling power (n-k)_(t-k) vanishes beyond).
Rational x_of(const BoundProfile& profile, int t);

struct SandwichRow {
  int t = 0;
  BigInt count;  // i_t(G)
  BigInt lower;  // 2 C(n, t)
  Rational upper;  // 2 (1 + x(t)) C(n, t)
  bool lower_ok = false;
  bool upper_ok = false;
};

struct SandwichReport {
  BoundProfile profile;
  CoeffSeq sequence;
  std::vector<SandwichRow> rows;  // t = 1..n
  bool holds = false;
};

// Checks 2 C(n,t) <= i_t(G) <= 2 (1 + x(t)) C(n,t) for 1 <= t <= n with
// i_t counted exactly on the 2n-vertex graph.
SandwichReport coefficient_sandwich(const BipartiteGraph& b,
                                    const CountOptions& count = {},
                                    const BoundOptions& bounds = {});

// Right-hand side of the unimodality condition: (n-2t-1)/(t+1) for
// 1 <= t <= n/2 - 1 and (2t-1-n)/(n-t+1) for n/2 + 1 <= t <= n. Any other
// t throws UncoveredIndex.
Rational unimodality_threshold(int n, int t);
bool unimodality_threshold_ok(const BoundProfile& profile, int t);

// Whether t lies in one of the two ranges above.
bool unimodality_range_covers(int n, int t);

// (1 + 1/t)(1 + 1/(n-t)) >= (1 + x(t-1))(1 + x(t+1)) for 1 <= t <= n-1;
// PreconditionError otherwise.
bool logconcavity_threshold_ok(const BoundProfile& profile, int t);

struct PropertyReport {
  double p = 0.0;
  double d = 0.0;
  double k_limit = 0.0;  // 2 n ln d / d
  bool k_bound = false;  // K <= k_limit
  bool m_bound = false;  // m(k) <= n(1-p)^k + 3 sqrt(k n (1-p)^k ln n), k <= K
  bool connected = false;  // hence alpha = n
  bool m_at_most_n_minus_k = false;  // for every 1 <= k <= n
};

inline constexpr double kPropertyTolerance = 1e-9;

// The four structural properties that hold almost surely for G(n, n, p),
// evaluated on one concrete graph. Natural logs, d = n p at the sampling
// p; float comparisons allow relative slack kPropertyTolerance. Throws
// PreconditionError when d <= 1.
PropertyReport as_properties(const BipartiteGraph& b, double p,
                             const BoundProfile& profile);
PropertyReport as_properties(const BipartiteGraph& b, double p);

}  // namespace indseq
