#include "indseq/bipartite_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "indseq/errors.hpp"

namespace indseq {

namespace {

// Branch and bound for max over |A| = k of the vertices on the other side
// with no neighbour in A. Adding a vertex never uncovers anything, so the
// current uncovered count bounds every completion.
class UncoveredSearch {
 public:
  UncoveredSearch(const std::vector<VertexSet>& rows, int n,
                  std::uint64_t budget)
      : rows_(rows), n_(n), budget_(budget), order_(rows.size()) {
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return popcount(rows_[a]) < popcount(rows_[b]);
    });
  }

  int run(int k) {
    k_ = k;
    best_ = -1;
    dfs(0, 0, 0);
    return best_;
  }

 private:
  void dfs(std::size_t idx, int chosen, VertexSet covered) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("subset search exceeded " + std::to_string(budget_) +
                           " nodes");
    }
    const int uncovered = n_ - popcount(covered);
    if (chosen == k_) {
      best_ = std::max(best_, uncovered);
      return;
    }
    if (uncovered <= best_) return;
    if (static_cast<int>(order_.size() - idx) < k_ - chosen) return;
    dfs(idx + 1, chosen + 1, covered | rows_[order_[idx]]);
    dfs(idx + 1, chosen, covered);
  }

  const std::vector<VertexSet>& rows_;
  int n_;
  std::uint64_t budget_;
  std::vector<int> order_;
  std::uint64_t nodes_ = 0;
  int k_ = 0;
  int best_ = -1;
};

void check_k(const BipartiteGraph& b, int k) {
  if (k < 1 || k > b.side()) {
    throw PreconditionError("k must lie in [1, n]");
  }
}

BigInt falling(long a, long b) {
  if (b > a) return 0;
  BigInt out = 1;
  for (long i = 0; i < b; ++i) out *= a - i;
  return out;
}

}  // namespace

std::optional<int> compute_K(const BipartiteGraph& b,
                             const BoundOptions& options) {
  // A balanced edgeless pair of size k exists iff some k-subset of E leaves
  // at least k vertices of O undominated.
  UncoveredSearch search(b.rows(), b.side(), options.node_budget);
  for (int k = 1; k <= b.side(); ++k) {
    if (search.run(k) < k) return k;
  }
  return std::nullopt;
}

int compute_m(const BipartiteGraph& b, int k, const BoundOptions& options) {
  check_k(b, k);
  const auto cols = b.transposed_rows();
  UncoveredSearch from_e(b.rows(), b.side(), options.node_budget);
  UncoveredSearch from_o(cols, b.side(), options.node_budget);
  return std::max(from_e.run(k), from_o.run(k));
}

BoundProfile make_profile(const BipartiteGraph& b, const BoundOptions& options) {
  BoundProfile profile;
  profile.n = b.side();
  profile.K = compute_K(b, options);
  for (int k = 1; k <= b.side(); ++k) profile.m.push_back(compute_m(b, k, options));
  for (int t = 0; t <= b.side(); ++t) profile.x.push_back(x_of(profile, t));
  return profile;
}

Rational x_of(const BoundProfile& profile, int t) {
  const int n = profile.n;
  if (t < 0 || t > n) {
    throw PreconditionError("x(t) is defined for 0 <= t <= n, got t = " +
                            std::to_string(t));
  }
  const int cap = profile.K ? std::min(*profile.K, t / 2) : t / 2;
  Rational sum = 0;
  for (int k = 1; k <= cap; ++k) {
    const BigInt num = binomial(t, k) * falling(profile.m_at(k), t - k);
    if (num == 0) continue;
    sum += Rational(num, falling(n - k, t - k));
  }
  sum.canonicalize();
  return sum;
}

SandwichReport coefficient_sandwich(const BipartiteGraph& b,
                                    const CountOptions& count,
                                    const BoundOptions& bounds) {
  SandwichReport report;
  report.profile = make_profile(b, bounds);
  report.sequence = ind_seq(b.to_graph(), count);
  report.holds = true;
  const int n = b.side();
  for (int t = 1; t <= n; ++t) {
    SandwichRow row;
    row.t = t;
    row.count = t < static_cast<int>(report.sequence.size())
                    ? report.sequence[t]
                    : BigInt(0);
    const BigInt c = binomial(n, t);
    row.lower = 2 * c;
    row.upper = 2 * (1 + report.profile.x[t]) * c;
    row.upper.canonicalize();
    row.lower_ok = row.lower <= row.count;
    row.upper_ok = Rational(row.count) <= row.upper;
    report.holds = report.holds && row.lower_ok && row.upper_ok;
    report.rows.push_back(std::move(row));
  }
  return report;
}

bool unimodality_range_covers(int n, int t) {
  return (t >= 1 && 2 * t <= n - 2) || (2 * t >= n + 2 && t <= n);
}

Rational unimodality_threshold(int n, int t) {
  Rational out;
  if (t >= 1 && 2 * t <= n - 2) {
    out = Rational(n - 2 * t - 1, t + 1);
  } else if (2 * t >= n + 2 && t <= n) {
    out = Rational(2 * t - 1 - n, n - t + 1);
  } else {
    throw UncoveredIndex("t = " + std::to_string(t) +
                         " is outside both unimodality ranges for n = " +
                         std::to_string(n));
  }
  out.canonicalize();
  return out;
}

bool unimodality_threshold_ok(const BoundProfile& profile, int t) {
  const Rational limit = unimodality_threshold(profile.n, t);
  return x_of(profile, t) <= limit;
}

bool logconcavity_threshold_ok(const BoundProfile& profile, int t) {
  const int n = profile.n;
  if (t < 1 || t > n - 1) {
    throw PreconditionError("log-concavity condition needs 1 <= t <= n-1");
  }
  Rational lhs = (1 + Rational(1, t)) * (1 + Rational(1, n - t));
  Rational rhs = (1 + x_of(profile, t - 1)) * (1 + x_of(profile, t + 1));
  lhs.canonicalize();
  rhs.canonicalize();
  return lhs >= rhs;
}

PropertyReport as_properties(const BipartiteGraph& b, double p,
                             const BoundProfile& profile) {
  const int n = b.side();
  PropertyReport r;
  r.p = p;
  r.d = n * p;
  if (!(r.d > 1.0)) {
    throw PreconditionError("structural properties need d = np > 1");
  }
  auto within = [](double value, double limit) {
    return value <= limit + kPropertyTolerance * std::max(1.0, std::abs(limit));
  };
  r.k_limit = 2.0 * n * std::log(r.d) / r.d;
  r.k_bound = profile.K.has_value() && within(*profile.K, r.k_limit);

  const int k_top = profile.K.value_or(n);
  r.m_bound = true;
  for (int k = 1; k <= k_top; ++k) {
    const double miss = std::pow(1.0 - p, k);
    const double limit =
        n * miss + 3.0 * std::sqrt(k * n * miss * std::log(static_cast<double>(n)));
    if (!within(profile.m_at(k), limit)) r.m_bound = false;
  }
  r.connected = is_connected(b.to_graph());
  r.m_at_most_n_minus_k = true;
  for (int k = 1; k <= n; ++k) {
    if (profile.m_at(k) > n - k) r.m_at_most_n_minus_k = false;
  }
  return r;
}

PropertyReport as_properties(const BipartiteGraph& b, double p) {
  return as_properties(b, p, make_profile(b));
}

}  // namespace indseq
