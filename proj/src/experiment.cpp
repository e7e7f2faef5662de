#include "indseq/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "indseq/errors.hpp"
#include "indseq/random.hpp"

namespace indseq {

double PSpec::evaluate(int n) const {
  if (n < 1) throw PreconditionError("side size must be positive");
  const double ln = std::log(static_cast<double>(n));
  double p = value;
  switch (kind) {
    case Kind::kFixed:
    case Kind::kDeltaConstant:
      break;
    case Kind::kSqrtLog:
      p = value * std::sqrt(ln / n);
      break;
    case Kind::kConnectivity:
      if (n < 2) throw PreconditionError("connectivity schedule needs n >= 2");
      p = (ln + std::log(ln) + value) / n;
      break;
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << "p = " << p << " from '" << describe() << "' at n = " << n
        << " is outside [0, 1]";
    throw PreconditionError(msg.str());
  }
  return p;
}

std::string PSpec::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::kFixed: break;
    case Kind::kDeltaConstant: out << "delta-constant:"; break;
    case Kind::kSqrtLog: out << "sqrt-log:"; break;
    case Kind::kConnectivity: out << "connectivity:"; break;
  }
  out << value;
  return out.str();
}

PSpec parse_schedule(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw ParseError("schedule must look like name:value, got '" + text + "'");
  }
  const std::string name = text.substr(0, colon);
  PSpec spec;
  if (name == "delta-constant") spec.kind = PSpec::Kind::kDeltaConstant;
  else if (name == "sqrt-log") spec.kind = PSpec::Kind::kSqrtLog;
  else if (name == "connectivity") spec.kind = PSpec::Kind::kConnectivity;
  else throw ParseError("unknown schedule '" + name + "'");
  const std::string number = text.substr(colon + 1);
  std::size_t used = 0;
  try {
    spec.value = std::stod(number, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != number.size() || !std::isfinite(spec.value)) {
    throw ParseError("bad schedule parameter '" + number + "'");
  }
  return spec;
}

namespace {

SampleRecord run_sample(const ExperimentConfig& config, double p, bool exact,
                        std::uint64_t stream) {
  const int n = config.n;
  const BipartiteGraph b = sample_bipartite(n, p, RngSpec{config.seed, stream});
  SampleRecord r;
  r.stream = stream;
  r.edges = b.edge_count();

  const BoundProfile profile = make_profile(b, config.bounds);
  r.K = profile.K;
  r.x_min = r.x_max = x_of(profile, 1);
  for (int t = 2; t <= n; ++t) {
    const Rational x = x_of(profile, t);
    r.x_min = std::min(r.x_min, x);
    r.x_max = std::max(r.x_max, x);
  }
  r.unimodality_threshold_all = true;
  for (int t = 1; t <= n; ++t) {
    if (unimodality_range_covers(n, t) && !unimodality_threshold_ok(profile, t)) {
      r.unimodality_threshold_all = false;
    }
  }
  r.logconcavity_threshold_all = true;
  for (int t = 1; t <= n - 1; ++t) {
    if (!logconcavity_threshold_ok(profile, t)) r.logconcavity_threshold_all = false;
  }

  if (exact) {
    const SandwichReport sw = coefficient_sandwich(b, config.count, config.bounds);
    r.sandwich = sw.holds;
    r.sequence = sw.sequence;
    r.verdict = analyze(sw.sequence);
    r.mode_at_floor_half = has_mode_at(*r.verdict, n / 2);
    r.mode_at_ceil_half = has_mode_at(*r.verdict, (n + 1) / 2);
  }
  if (n * p > 1.0) r.properties = as_properties(b, p, profile);
  return r;
}

void add_rate(ExperimentResult& result, const std::string& name,
              auto applicable, auto holds) {
  ExperimentResult::Rate rate{name, 0, 0};
  for (const auto& s : result.samples) {
    if (!applicable(s)) continue;
    ++rate.applicable;
    if (holds(s)) ++rate.holding;
  }
  result.rates.push_back(rate);
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  if (config.samples < 1) throw PreconditionError("samples must be at least 1");
  if (config.workers < 1) throw PreconditionError("workers must be at least 1");
  if (config.n < 1 || config.n > BipartiteGraph::kMaxSide) {
    throw PreconditionError("side size must lie in [1, 32]");
  }
  ExperimentResult result;
  result.config = config;
  result.p = config.p.evaluate(config.n);
  result.exact = !config.bounds_only && config.n <= kExactCountLimit;
  if (!config.bounds_only && !result.exact) {
    throw PreconditionError("exact counting needs n <= 13; use bounds-only mode");
  }
  const double ln = std::log(static_cast<double>(config.n));
  const double target = config.n >= 2 ? ln - 2.0 * std::log(ln) : 0.0;
  result.prefix_target = std::isfinite(target) && target > 0
                             ? static_cast<int>(std::floor(target)) : 0;

  const auto count = static_cast<std::size_t>(config.samples);
  std::vector<SampleRecord> records(count);
  std::vector<std::exception_ptr> errors(count);
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(config.workers), count);
  auto work = [&](std::size_t first) {
    for (std::size_t s = first; s < count; s += workers) {
      try {
        records[s] = run_sample(config, result.p, result.exact, s);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  // Lowest failing stream wins, independent of scheduling.
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  result.samples = std::move(records);

  const int target_len = result.prefix_target;
  auto always = [](const SampleRecord&) { return true; };
  auto counted = [](const SampleRecord& s) { return s.verdict.has_value(); };
  auto has_props = [](const SampleRecord& s) { return s.properties.has_value(); };
  add_rate(result, "unimodal", counted,
           [](const SampleRecord& s) { return s.verdict->unimodal; });
  add_rate(result, "mode_at_half", counted, [](const SampleRecord& s) {
    return s.mode_at_floor_half || s.mode_at_ceil_half;
  });
  add_rate(result, "log_concave", counted,
           [](const SampleRecord& s) { return s.verdict->logconcave_from == 0; });
  add_rate(result, "increasing_prefix", counted, [target_len](const SampleRecord& s) {
    return s.verdict->increasing_prefix_len >= static_cast<std::size_t>(target_len);
  });
  add_rate(result, "sandwich", counted,
           [](const SampleRecord& s) { return *s.sandwich; });
  add_rate(result, "unimodality_threshold", always,
           [](const SampleRecord& s) { return s.unimodality_threshold_all; });
  add_rate(result, "logconcavity_threshold", always,
           [](const SampleRecord& s) { return s.logconcavity_threshold_all; });
  add_rate(result, "k_bound", has_props,
           [](const SampleRecord& s) { return s.properties->k_bound; });
  add_rate(result, "m_bound", has_props,
           [](const SampleRecord& s) { return s.properties->m_bound; });
  add_rate(result, "connected", has_props,
           [](const SampleRecord& s) { return s.properties->connected; });
  add_rate(result, "m_at_most_n_minus_k", has_props,
           [](const SampleRecord& s) { return s.properties->m_at_most_n_minus_k; });
  return result;
}

}  // namespace indseq
