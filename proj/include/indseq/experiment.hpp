#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "indseq/bipartite_bounds.hpp"
#include "indseq/ind_poly.hpp"
#include "indseq/seq_analysis.hpp"

namespace indseq {

// Edge probability for G(n, n, p): a fixed value or a schedule in n.
//   fixed:          p = value
//   delta-constant: p = value (a constant delta, independent of n)
//   sqrt-log:       p = value * n^{-1/2} * sqrt(ln n)
//   connectivity:   p = (ln n + ln ln n + value) / n
struct PSpec {
  enum class Kind { kFixed, kDeltaConstant, kSqrtLog, kConnectivity };
  Kind kind = Kind::kFixed;
  double value = 0.5;

  // Throws PreconditionError unless the result lies in [0, 1].
  double evaluate(int n) const;
  std::string describe() const;  // "0.5", "sqrt-log:2", ...
};

// "delta-constant:0.3", "sqrt-log:2", "connectivity:1"; ParseError otherwise.
PSpec parse_schedule(const std::string& text);

inline constexpr int kExactCountLimit = 13;

struct ExperimentConfig {
  int n = 10;
  PSpec p;
  int samples = 1;
  std::uint64_t seed = 0;
  int workers = 1;
  // Exact sequences are counted when n <= kExactCountLimit unless
  // bounds_only; bounds_only skips counting at any n.
  bool bounds_only = false;
  CountOptions count;
  BoundOptions bounds;
};

struct SampleRecord {
  std::uint64_t stream = 0;
  int edges = 0;
  std::optional<CoeffSeq> sequence;
  std::optional<SeqVerdict> verdict;
  bool mode_at_floor_half = false;
  bool mode_at_ceil_half = false;
  std::optional<bool> sandwich;
  std::optional<int> K;
  Rational x_min;  // over t = 1..n
  Rational x_max;
  bool unimodality_threshold_all = false;  // every covered t
  bool logconcavity_threshold_all = false;  // every 1 <= t <= n-1
  std::optional<PropertyReport> properties;  // absent when d <= 1
};

struct ExperimentResult {
  ExperimentConfig config;
  double p = 0.0;
  bool exact = false;
  int prefix_target = 0;  // max(0, floor(ln n - 2 ln ln n))
  std::vector<SampleRecord> samples;  // ascending stream

  // Aggregate rate name -> (holding, applicable).
  struct Rate {
    std::string name;
    int holding = 0;
    int applicable = 0;
  };
  std::vector<Rate> rates;
};

// Sample s uses RngSpec{seed, s}. Samples are spread over `workers`
// threads and merged by stream index, so the result does not depend on
// the worker count.
ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace indseq
