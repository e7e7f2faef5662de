#include "indseq/ind_poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "indseq/errors.hpp"

namespace indseq {

namespace {

// i_t(H) <= C(64, 32) < 2^64 for every graph H on at most 64 vertices, and
// every intermediate value below (partial convolution sums, the two branch
// terms) is itself a coefficient of some induced subgraph or bounded by
// one. uint64 arithmetic is therefore exact here.
using Poly = std::vector<std::uint64_t>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly binomial_row(int k) {
  Poly row{1};
  for (int i = 0; i < k; ++i) {
    row.push_back(0);
    for (std::size_t t = row.size() - 1; t > 0; --t) row[t] += row[t - 1];
  }
  return row;
}

class IndependenceCounter {
 public:
  IndependenceCounter(const Graph& g, const CountOptions& options)
      : g_(g), options_(options) {}

  Poly count(VertexSet s) {
    if (s == 0) return Poly{1};
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    if (++nodes_ > options_.node_budget) {
      throw BudgetExceeded("independence polynomial exceeded " +
                           std::to_string(options_.node_budget) +
                           " branch nodes");
    }

    VertexSet isolated = 0;
    for (VertexSet r = s; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      if ((g_.neighbors(v) & s) == 0) isolated |= VertexSet{1} << v;
    }
    Poly result;
    if (isolated) {
      result = multiply(binomial_row(popcount(isolated)), count(s & ~isolated));
    } else {
      const VertexSet comp = component_of(g_, std::countr_zero(s), s);
      if (comp != s) {
        result = multiply(count(comp), count(s & ~comp));
      } else {
        result = branch(s);
      }
    }
    if (memo_.size() >= options_.cache_limit) memo_.clear();
    memo_.emplace(s, result);
    return result;
  }

 private:
  Poly branch(VertexSet s) {
    int pivot = -1;
    int best = -1;
    for (VertexSet r = s; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      const int d = popcount(g_.neighbors(v) & s);
      if (d > best) {
        best = d;
        pivot = v;
      }
    }
    const VertexSet bit = VertexSet{1} << pivot;
    Poly without = count(s & ~bit);
    const Poly with = count(s & ~bit & ~g_.neighbors(pivot));
    if (without.size() < with.size() + 1) without.resize(with.size() + 1, 0);
    for (std::size_t t = 0; t < with.size(); ++t) without[t + 1] += with[t];
    return without;
  }

  const Graph& g_;
  const CountOptions& options_;
  std::unordered_map<VertexSet, Poly> memo_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

CoeffSeq::CoeffSeq(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0);
}

CoeffSeq::CoeffSeq(std::initializer_list<long> coeffs)
    : CoeffSeq(std::vector<BigInt>(coeffs.begin(), coeffs.end())) {}

CoeffSeq CoeffSeq::from_strings(const std::vector<std::string>& digits) {
  std::vector<BigInt> out;
  out.reserve(digits.size());
  for (const auto& d : digits) {
    BigInt v;
    if (d.empty() || v.set_str(d, 10) != 0) {
      throw ParseError("not a decimal integer: '" + d + "'");
    }
    out.push_back(std::move(v));
  }
  if (out.empty()) throw ParseError("empty coefficient list");
  return CoeffSeq(std::move(out));
}

std::vector<std::string> CoeffSeq::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  return out;
}

std::string CoeffSeq::to_string() const {
  std::string out = "(";
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    if (t) out += ", ";
    out += coeffs_[t].get_str();
  }
  return out + ")";
}

CoeffSeq ind_seq(const Graph& g, const CountOptions& options) {
  IndependenceCounter counter(g, options);
  const Poly p = counter.count(all_vertices(g.order()));
  std::vector<BigInt> coeffs;
  coeffs.reserve(p.size());
  for (std::uint64_t c : p) {
    BigInt v;
    mpz_import(v.get_mpz_t(), 1, 1, sizeof c, 0, 0, &c);
    coeffs.push_back(std::move(v));
  }
  return CoeffSeq(std::move(coeffs));
}

BigInt total(const CoeffSeq& p) {
  BigInt sum = 0;
  for (const auto& c : p) sum += c;
  return sum;
}

BigInt total_count(const Graph& g, const CountOptions& options) {
  return total(ind_seq(g, options));
}

int alpha(const Graph& g, const CountOptions& options) {
  return ind_seq(g, options).degree();
}

Rational evaluate(const CoeffSeq& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * x + *it;
  }
  acc.canonicalize();
  return acc;
}

CoeffSeq compose_union(const CoeffSeq& p, const CoeffSeq& q) {
  std::vector<BigInt> out(p.size() + q.size() - 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  }
  return CoeffSeq(std::move(out));
}

CoeffSeq compose_join(const CoeffSeq& p, const CoeffSeq& q) {
  std::vector<BigInt> out(std::max(p.size(), q.size()), 0);
  for (std::size_t t = 0; t < p.size(); ++t) out[t] += p[t];
  for (std::size_t t = 0; t < q.size(); ++t) out[t] += q[t];
  out[0] -= 1;
  return CoeffSeq(std::move(out));
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace indseq
