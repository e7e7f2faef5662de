#include "doctest.h"
#include "indseq/enumerate.hpp"
#include "indseq/errors.hpp"
#include "indseq/seq_analysis.hpp"
#include "oracles.hpp"

using namespace indseq;

namespace {

std::vector<BigInt> seq(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<BigInt> binomial_row(int n) {
  std::vector<BigInt> row;
  for (int t = 0; t <= n; ++t) row.push_back(oracle::pascal(n, t));
  return row;
}

// Line graph: one vertex per edge, adjacent when the edges share an end.
Graph line_graph(const Graph& g) {
  const auto e = g.edges();
  std::vector<Edge> out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (e[i].first == e[j].first || e[i].first == e[j].second ||
          e[i].second == e[j].first || e[i].second == e[j].second) {
        out.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return Graph(static_cast<int>(e.size()), out);
}

}  // namespace

TEST_CASE("analyze") {
  const SeqVerdict bad = analyze(seq({1, 49, 48, 64}));
  CHECK_FALSE(bad.unimodal);
  CHECK(bad.modes == std::vector<std::size_t>{3});
  CHECK(bad.increasing_prefix_len == 1);
  CHECK(bad.logconcave_from == 2);

  const SeqVerdict plateau = analyze(seq({1, 3, 3, 1}));
  CHECK(plateau.unimodal);
  CHECK(plateau.modes == std::vector<std::size_t>{1, 2});

  const SeqVerdict c5 = analyze(seq({1, 5, 5}));
  CHECK(c5.unimodal);
  CHECK(c5.logconcave_from == 0);
  CHECK(c5.increasing_prefix_len == 2);

  const SeqVerdict single = analyze(seq({1}));
  CHECK(single.unimodal);
  CHECK(single.modes == std::vector<std::size_t>{0});
  CHECK(single.decreasing_from_final_third);

  // Unimodal but with a dip in log-concavity at index 2: 2^2 < 4*3.
  const SeqVerdict dip = analyze(seq({1, 4, 2, 3, 1}));
  CHECK_FALSE(dip.unimodal);
  const SeqVerdict weak = analyze(seq({1, 2, 2, 3, 3, 1}));
  CHECK(weak.unimodal);
  CHECK(weak.logconcave_from == 2);  // 2^2 < 2*3 at index 2

  CHECK_THROWS_AS(analyze(std::vector<BigInt>{}), PreconditionError);
  CHECK_THROWS_AS(analyze(seq({1, 0, 2})), PreconditionError);
}

TEST_CASE("final third") {
  CHECK(final_third_start(0) == 0);
  CHECK(final_third_start(1) == 1);
  CHECK(final_third_start(2) == 1);
  CHECK(final_third_start(3) == 2);
  CHECK(final_third_start(10) == 7);
  CHECK(analyze(seq({1, 6, 6, 2})).decreasing_from_final_third);
  CHECK_FALSE(analyze(seq({1, 6, 2, 5})).decreasing_from_final_third);
}

TEST_CASE("log-concavity") {
  CHECK(is_log_concave(binomial_row(10), 0));
  CHECK_FALSE(is_log_concave(seq({1, 49, 48, 64}), 1));
  CHECK(is_log_concave(seq({1, 49, 48, 64}), 2));
  CHECK(is_log_concave(seq({3, 100})));
  CHECK_THROWS_AS(is_log_concave(seq({1, 2}), 2), PreconditionError);
}

TEST_CASE("modes") {
  const SeqVerdict even = analyze(binomial_row(10));
  CHECK(has_mode_at(even, 5));
  CHECK_FALSE(has_mode_at(even, 4));
  const SeqVerdict odd = analyze(binomial_row(9));
  CHECK(has_mode_at(odd, 4));
  CHECK(has_mode_at(odd, 5));
  const SeqVerdict bad = analyze(seq({1, 49, 48, 64}));
  CHECK(has_mode_at(bad, 3));
  CHECK_FALSE(bad.unimodal);
}

TEST_CASE("real roots") {
  CHECK(is_real_rooted(seq({1, 4, 3})));
  CHECK(is_real_rooted(seq({1, 5, 5})));
  CHECK_FALSE(is_real_rooted(seq({1, 1, 1})));
  CHECK(is_real_rooted(seq({1})));
  // (1+x)^3 has a triple root; x^2 (1+2x) has a zero double root.
  CHECK(is_real_rooted(seq({1, 3, 3, 1})));
  CHECK(count_real_roots(seq({1, 3, 3, 1})) == 3);
  CHECK(is_real_rooted(seq({0, 0, 1, 2, 0})));
  CHECK(count_real_roots(seq({0, 0, 1, 2})) == 3);
  // (1+x)^2 (1+x+x^2): two real roots out of four.
  CHECK(count_real_roots(seq({1, 3, 4, 3, 1})) == 2);
  CHECK_FALSE(is_real_rooted(seq({1, 3, 4, 3, 1})));
  CHECK_FALSE(is_real_rooted(seq({1, 49, 48, 64})));
}

TEST_CASE("real roots imply log-concavity imply unimodality for graphs n <= 6") {
  int violations = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_all(n, 0)) {
      const CoeffSeq s = ind_seq(g);
      const bool rr = is_real_rooted(s);
      const bool lc = is_log_concave(s.coeffs(), 0);
      const bool um = analyze(s).unimodal;
      if ((rr && !lc) || (lc && !um)) ++violations;
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("claw-free and line graphs are real-rooted") {
  for (int n = 1; n <= 12; ++n) CHECK(is_real_rooted(ind_seq(path(n))));
  for (int n = 3; n <= 12; ++n) CHECK(is_real_rooted(ind_seq(cycle(n))));
  // Connected graphs with at most 7 edges (at most 8 vertices); line graphs
  // of disconnected graphs are unions, and products of real-rooted
  // polynomials stay real-rooted.
  int checked = 0;
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& g : enumerate_all(n, 1)) {
      if (g.edge_count() > 7 || !is_connected(g)) continue;
      CHECK(is_real_rooted(ind_seq(line_graph(g))));
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("analyze is deterministic") {
  const auto s = seq({1, 12, 48, 64});
  CHECK(analyze(s) == analyze(s));
}
