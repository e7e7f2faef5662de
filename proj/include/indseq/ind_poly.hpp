#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <vector>

#include "indseq/graph.hpp"

namespace indseq {

using BigInt = mpz_class;
using Rational = mpq_class;

// Coefficient vector of a polynomial with nonnegative integer coefficients;
// for ind_seq results, entry t is i_t(G). Trailing zeros are trimmed on
// construction, so degree() is the index of the last nonzero entry.
class CoeffSeq {
 public:
  CoeffSeq() : coeffs_{1} {}
  explicit CoeffSeq(std::vector<BigInt> coeffs);
  CoeffSeq(std::initializer_list<long> coeffs);

  // Each entry a decimal string; throws ParseError.
  static CoeffSeq from_strings(const std::vector<std::string>& digits);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& operator[](std::size_t t) const { return coeffs_[t]; }
  auto begin() const { return coeffs_.begin(); }
  auto end() const { return coeffs_.end(); }

  std::vector<std::string> to_strings() const;
  std::string to_string() const;  // "(1, 5, 5)"

  friend bool operator==(const CoeffSeq&, const CoeffSeq&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

struct CountOptions {
  // Branch nodes before BudgetExceeded is thrown.
  std::uint64_t node_budget = 100'000'000;
  // Memo entries kept per call; when full the table is cleared and refilled.
  std::size_t cache_limit = std::size_t{1} << 20;
};

// Independent-set sequence via P(G) = P(G - v) + x P(G - N[v]), branching on
// a maximum-degree vertex, splitting off connected components and memoising
// on the induced vertex set. Throws BudgetExceeded.
CoeffSeq ind_seq(const Graph& g, const CountOptions& options = {});

// i(G) = P(G, 1).
BigInt total_count(const Graph& g, const CountOptions& options = {});
BigInt total(const CoeffSeq& p);

int alpha(const Graph& g, const CountOptions& options = {});

Rational evaluate(const CoeffSeq& p, const Rational& x);

// Polynomial of a disjoint union (product) and of a join (P + Q - 1).
CoeffSeq compose_union(const CoeffSeq& p, const CoeffSeq& q);
CoeffSeq compose_join(const CoeffSeq& p, const CoeffSeq& q);

BigInt binomial(unsigned long n, unsigned long k);

}  // namespace indseq
