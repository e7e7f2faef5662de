#include <algorithm>

#include "indseq/seq_analysis.hpp"

namespace indseq {

namespace {

// Coefficients low to high, no trailing zeros; the zero polynomial is empty.
using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

RatPoly remainder(RatPoly num, const RatPoly& den) {
  const Rational& lead = den.back();
  while (degree(num) >= degree(den)) {
    const Rational factor = num.back() / lead;
    const std::size_t shift = num.size() - den.size();
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= factor * den[i];
    num.pop_back();  // leading term cancels exactly
    trim(num);
  }
  return num;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    RatPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int distinct_real_roots(const RatPoly& p) {
  std::vector<RatPoly> chain{p, derivative(p)};
  while (!chain.back().empty()) {
    RatPoly r = remainder(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  chain.pop_back();
  std::vector<int> at_neg_inf;
  std::vector<int> at_pos_inf;
  for (const auto& q : chain) {
    const int lead = sgn(q.back());
    at_pos_inf.push_back(lead);
    at_neg_inf.push_back(degree(q) % 2 == 0 ? lead : -lead);
  }
  return sign_changes(at_neg_inf) - sign_changes(at_pos_inf);
}

int roots_with_multiplicity(const RatPoly& p) {
  if (degree(p) <= 0) return 0;
  return distinct_real_roots(p) + roots_with_multiplicity(gcd(p, derivative(p)));
}

RatPoly normalised(std::span<const BigInt> coeffs) {
  RatPoly p(coeffs.begin(), coeffs.end());
  trim(p);
  const auto first = std::find_if(p.begin(), p.end(),
                                  [](const Rational& c) { return c != 0; });
  p.erase(p.begin(), first);
  return p;
}

}  // namespace

int count_real_roots(std::span<const BigInt> coeffs) {
  RatPoly p(coeffs.begin(), coeffs.end());
  trim(p);
  const auto zeros = std::find_if(p.begin(), p.end(),
                                  [](const Rational& c) { return c != 0; }) -
                     p.begin();
  return static_cast<int>(zeros) + roots_with_multiplicity(normalised(coeffs));
}

bool is_real_rooted(std::span<const BigInt> coeffs) {
  const RatPoly p = normalised(coeffs);
  if (p.empty()) return true;
  return roots_with_multiplicity(p) == degree(p);
}

}  // namespace indseq
