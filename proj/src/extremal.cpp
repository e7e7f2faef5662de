#include "indseq/extremal.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "indseq/errors.hpp"
#include "indseq/graph6.hpp"
#include "indseq/seq_analysis.hpp"

namespace indseq {

HighReal to_high(const Rational& q) {
  return HighReal(q.get_num().get_str()) / HighReal(q.get_den().get_str());
}

CoeffSeq kdn_seq(int delta, int n) {
  if (delta < 1 || delta > n - 1) {
    throw PreconditionError("kdn_seq needs 1 <= delta <= n - 1");
  }
  std::vector<BigInt> coeffs(std::max(n - delta, delta) + 1, 0);
  for (int t = 0; t <= n - delta; ++t) coeffs[t] += binomial(n - delta, t);
  for (int t = 0; t <= delta; ++t) coeffs[t] += binomial(delta, t);
  coeffs[0] -= 1;
  return CoeffSeq(std::move(coeffs));
}

Threshold thresholds(const Rational& x) {
  if (x <= 0) throw PreconditionError("threshold constants need x > 0");
  const HighReal hx = to_high(x);
  const HighReal log1x = log(1 + hx);
  Threshold th;
  th.x = x;
  th.c_x = log1x / (log1x - hx / (1 + hx));
  th.d_x = 2 * log(hx / (1 + hx)) / log1x;
  return th;
}

HighReal n_min(const Rational& x, int delta) {
  const Threshold th = thresholds(x);
  const HighReal d = delta;
  return (th.c_x - 1) * d * d + ((1 - th.d_x) * th.c_x + 1 + th.d_x) * d - th.d_x;
}

AlekseevCheck alekseev_check(const Graph& g, const Rational& x,
                             const CountOptions& count) {
  if (x <= 0) throw PreconditionError("alekseev_check needs x > 0");
  const CoeffSeq seq = ind_seq(g, count);
  const int n = g.order();
  const int a = seq.degree();
  AlekseevCheck out;
  out.value = evaluate(seq, x);
  Rational base = 1 + Rational(n) * x / a;
  base.canonicalize();
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), a);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), a);
  out.middle = Rational(num, den);
  out.middle.canonicalize();
  out.polynomial_bound = out.value <= out.middle;

  const HighReal hx = to_high(x);
  out.envelope = pow(1 + hx, a) * exp((n - a) * hx / (1 + hx));
  const HighReal mid = to_high(out.middle);
  out.exponential_bound = mid <= out.envelope * (1 + HighReal(kEnvelopeTolerance));
  return out;
}

std::string ObjectiveSpec::describe() const {
  switch (kind) {
    case Objective::kTotal:
      return "i(G)";
    case Objective::kWeighted:
      return "P(G,x=" + x.get_str() + ")";
    case Objective::kFixedSize:
      return "i_" + std::to_string(t) + "(G)";
  }
  return {};
}

Rational ObjectiveSpec::value_of(const CoeffSeq& seq) const {
  switch (kind) {
    case Objective::kTotal:
      return Rational(indseq::total(seq));
    case Objective::kWeighted:
      return evaluate(seq, x);
    case Objective::kFixedSize:
      return t >= 0 && t < static_cast<int>(seq.size()) ? Rational(seq[t])
                                                          : Rational(0);
  }
  return 0;
}

std::optional<Graph> kdn_graph(int n, int delta) {
  if (delta == 0) return empty(n);
  if (delta < 0 || 2 * delta > n) return std::nullopt;
  return complete_bipartite(delta, n - delta);
}

namespace {

struct ShardBest {
  Rational value;
  std::vector<CanonicalCode> codes;
  std::size_t classes = 0;
  bool any = false;
};

ShardBest scan_shard(int n, int delta, const ObjectiveSpec& objective,
                     const ExtremalOptions& options, int shard, int shards) {
  EnumerationOptions eo = options.enumeration;
  eo.shard = shard;
  eo.shards = shards;
  ShardBest best;
  enumerate_graphs(
      n, delta,
      [&](const Graph& g) {
        ++best.classes;
        const Rational v = objective.value_of(ind_seq(g, options.count));
        if (!best.any || v > best.value) {
          best.any = true;
          best.value = v;
          best.codes.clear();
        }
        if (v == best.value) best.codes.push_back(canonical(g));
      },
      eo);
  return best;
}

}  // namespace

ExtremalReport verify_extremal(int n, int delta, const ObjectiveSpec& objective,
                               const ExtremalOptions& options) {
  if (delta < 0 || delta > n - 1) {
    throw PreconditionError("no graph on " + std::to_string(n) +
                            " vertices has minimum degree " +
                            std::to_string(delta));
  }
  if (objective.kind == Objective::kWeighted && objective.x <= 0) {
    throw PreconditionError("evaluation point must be positive");
  }
  const int shards = std::max(1, options.workers);
  std::vector<std::future<ShardBest>> jobs;
  for (int s = 1; s < shards; ++s) {
    jobs.push_back(std::async(std::launch::async, scan_shard, n, delta,
                              std::cref(objective), std::cref(options), s,
                              shards));
  }
  std::vector<ShardBest> parts;
  parts.push_back(scan_shard(n, delta, objective, options, 0, shards));
  for (auto& j : jobs) parts.push_back(j.get());

  ExtremalReport report;
  report.n = n;
  report.delta = delta;
  report.objective = objective;
  bool any = false;
  for (const auto& part : parts) {
    report.classes += part.classes;
    if (!part.any) continue;
    if (!any || part.value > report.max_value) {
      report.max_value = part.value;
      report.maximizers.clear();
      any = true;
    }
    if (part.value == report.max_value) {
      report.maximizers.insert(report.maximizers.end(), part.codes.begin(),
                               part.codes.end());
    }
  }
  std::sort(report.maximizers.begin(), report.maximizers.end());
  for (const auto& code : report.maximizers) {
    report.maximizer_graph6.push_back(write_graph6(graph_from_code(code)));
  }
  report.unique = report.maximizers.size() == 1;

  if (const auto kdn = kdn_graph(n, delta)) {
    report.kdn_in_family = true;
    report.kdn_value = objective.value_of(ind_seq(*kdn, options.count));
    report.kdn_is_max = std::binary_search(report.maximizers.begin(),
                                           report.maximizers.end(),
                                           canonical(*kdn));
  }
  return report;
}

ExtremalReport verify_max_total(int n, int delta, const std::optional<Rational>& x,
                                const ExtremalOptions& options) {
  return verify_extremal(
      n, delta, x ? ObjectiveSpec::weighted(*x) : ObjectiveSpec::total(), options);
}

ExtremalReport verify_fixed_size(int n, int delta, int t,
                                 const ExtremalOptions& options) {
  if (t < 0 || t > n) throw PreconditionError("size t must lie in [0, n]");
  return verify_extremal(n, delta, ObjectiveSpec::fixed_size(t), options);
}

ConjectureProbe probe_conjecture3(int delta, int n_first, int n_last,
                                  const ExtremalOptions& options) {
  if (delta < 1) throw PreconditionError("probe needs delta >= 1");
  ConjectureProbe probe;
  probe.delta = delta;
  const int start = std::max(2 * delta, n_first);
  const int stop = std::min(n_last, options.enumeration.max_order);
  for (int n = start; n <= stop; ++n) {
    const ExtremalReport r = verify_max_total(n, delta, std::nullopt, options);
    ConjectureRow row;
    row.n = n;
    row.kdn_value = r.kdn_value;
    row.max_value = r.max_value;
    row.counterexample = r.max_value > r.kdn_value;
    row.kdn_unique = r.kdn_is_max && r.unique;
    if (r.kdn_is_max) {
      const CanonicalCode kdn = canonical(*kdn_graph(n, delta));
      for (std::size_t i = 0; i < r.maximizers.size(); ++i) {
        if (r.maximizers[i] != kdn) row.ties.push_back(r.maximizer_graph6[i]);
      }
    }
    probe.any_counterexample = probe.any_counterexample || row.counterexample;
    probe.rows.push_back(std::move(row));
    probe.reached = n;
  }
  return probe;
}

bool levit_mandrescu_check(const Graph& g, const CountOptions& count) {
  return analyze(ind_seq(g, count)).decreasing_from_final_third;
}

bool levit_mandrescu_check(const BipartiteGraph& b, const CountOptions& count) {
  return levit_mandrescu_check(b.to_graph(), count);
}

}  // namespace indseq
