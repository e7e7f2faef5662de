#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <optional>
#include <string>
#include <vector>

#include "indseq/canonical.hpp"
#include "indseq/enumerate.hpp"
#include "indseq/graph.hpp"
#include "indseq/ind_poly.hpp"

namespace indseq {

// 50 decimal digits (~166-bit mantissa).
using HighReal = boost::multiprecision::cpp_bin_float_50;

HighReal to_high(const Rational& q);

// Coefficients of (1+x)^(n-delta) + (1+x)^delta - 1, the independence
// polynomial of K_{delta, n-delta}. Requires 1 <= delta <= n-1.
CoeffSeq kdn_seq(int delta, int n);

struct Threshold {
  Rational x;
  HighReal c_x;  // ln(1+x) / (ln(1+x) - x/(1+x))
  HighReal d_x;  // 2 ln(x/(1+x)) / ln(1+x)
};

// Throws PreconditionError for x <= 0.
Threshold thresholds(const Rational& x);

// (C_x - 1) delta^2 + ((1 - D_x) C_x + 1 + D_x) delta - D_x: from this many
// vertices on, K_{delta, n-delta} is the strict maximiser of P(G, x).
HighReal n_min(const Rational& x, int delta);

struct AlekseevCheck {
  Rational value;   // P(G, x)
  Rational middle;  // (1 + n x / alpha)^alpha, exact
  HighReal envelope;  // (1 + x)^alpha e^{(n - alpha) x / (1 + x)}
  bool polynomial_bound = false;   // value <= middle, exact
  bool exponential_bound = false;  // middle <= envelope, relative tol 1e-12
};

inline constexpr double kEnvelopeTolerance = 1e-12;

AlekseevCheck alekseev_check(const Graph& g, const Rational& x,
                             const CountOptions& count = {});

enum class Objective { kTotal, kWeighted, kFixedSize };

struct ObjectiveSpec {
  Objective kind = Objective::kTotal;
  Rational x = 1;  // kWeighted
  int t = 0;       // kFixedSize

  static ObjectiveSpec total() { return {}; }
  static ObjectiveSpec weighted(const Rational& x) {
    return {Objective::kWeighted, x, 0};
  }
  static ObjectiveSpec fixed_size(int t) { return {Objective::kFixedSize, 1, t}; }

  std::string describe() const;  // "i(G)", "P(G,x=1/2)", "i_3(G)"
  Rational value_of(const CoeffSeq& seq) const;
};

struct ExtremalOptions {
  int workers = 1;
  EnumerationOptions enumeration;
  CountOptions count;
};

struct ExtremalReport {
  int n = 0;
  int delta = 0;
  ObjectiveSpec objective;
  Rational max_value;
  std::vector<CanonicalCode> maximizers;  // ascending
  std::vector<std::string> maximizer_graph6;  // canonical forms, same order
  bool unique = false;
  bool kdn_in_family = false;
  bool kdn_is_max = false;
  Rational kdn_value;  // 0 when K_{delta,n-delta} is not in the family
  std::size_t classes = 0;
};

// The member of the family "minimum degree >= delta on n vertices" that the
// extremal results single out: K_{delta, n-delta} (the empty graph for
// delta = 0). nullopt when 2 delta > n.
std::optional<Graph> kdn_graph(int n, int delta);

// Exhaustive argmax of the objective over all isomorphism classes on n
// vertices with minimum degree >= delta. Ties are kept, never broken.
ExtremalReport verify_extremal(int n, int delta, const ObjectiveSpec& objective,
                               const ExtremalOptions& options = {});

ExtremalReport verify_max_total(int n, int delta,
                                const std::optional<Rational>& x = std::nullopt,
                                const ExtremalOptions& options = {});

ExtremalReport verify_fixed_size(int n, int delta, int t,
                                 const ExtremalOptions& options = {});

struct ConjectureRow {
  int n = 0;
  Rational kdn_value;
  Rational max_value;
  bool counterexample = false;  // some class beats K_{delta, n-delta}
  bool kdn_unique = false;
  std::vector<std::string> ties;  // graph6 of other classes matching K_{delta,n-delta}
};

struct ConjectureProbe {
  int delta = 0;
  std::vector<ConjectureRow> rows;
  // Largest n examined; below the requested end when the enumeration
  // limit cut the range short.
  int reached = 0;
  bool any_counterexample = false;
};

// For every n in [max(2 delta, n_first), n_last] within the enumeration
// limit, compares the best i(G) against i(K_{delta, n-delta}).
ConjectureProbe probe_conjecture3(int delta, int n_first, int n_last,
                                  const ExtremalOptions& options = {});

// The final-third chain i_s >= i_{s+1} >= ... >= i_alpha, s = ceil((2 alpha - 1)/3).
bool levit_mandrescu_check(const Graph& g, const CountOptions& count = {});
bool levit_mandrescu_check(const BipartiteGraph& b,
                           const CountOptions& count = {});

}  // namespace indseq
