#include "indseq/seq_analysis.hpp"

#include <algorithm>

#include "indseq/errors.hpp"

namespace indseq {

namespace {

bool log_concave_at(std::span<const BigInt> a, std::size_t k) {
  return a[k] * a[k] >= a[k - 1] * a[k + 1];
}

}  // namespace

std::size_t final_third_start(std::size_t last_index) {
  if (last_index == 0) return 0;
  return (2 * last_index - 1 + 2) / 3;
}

SeqVerdict analyze(std::span<const BigInt> seq) {
  if (seq.empty()) throw PreconditionError("analyze: empty sequence");
  if (std::any_of(seq.begin(), seq.end(), [](const BigInt& a) { return a <= 0; })) {
    throw PreconditionError("analyze: entries must be positive");
  }
  const std::size_t last = seq.size() - 1;
  SeqVerdict v;

  const BigInt& peak = *std::max_element(seq.begin(), seq.end());
  for (std::size_t t = 0; t <= last; ++t) {
    if (seq[t] == peak) v.modes.push_back(t);
  }

  std::size_t up = 0;
  while (up < last && seq[up] <= seq[up + 1]) ++up;
  v.increasing_prefix_len = up;
  std::size_t down = up;
  while (down < last && seq[down] >= seq[down + 1]) ++down;
  v.unimodal = down == last;

  // The suffix from s is log-concave iff no interior index above s violates
  // the inequality, so s is the largest violating index (or 0).
  v.logconcave_from = 0;
  for (std::size_t k = last > 0 ? last - 1 : 0; k >= 1; --k) {
    if (!log_concave_at(seq, k)) {
      v.logconcave_from = k;
      break;
    }
  }

  const std::size_t start = final_third_start(last);
  v.decreasing_from_final_third = true;
  for (std::size_t t = start; t < last; ++t) {
    if (seq[t] < seq[t + 1]) v.decreasing_from_final_third = false;
  }
  return v;
}

bool is_log_concave(std::span<const BigInt> seq, std::size_t from) {
  if (from >= seq.size()) {
    throw PreconditionError("is_log_concave: start index out of range");
  }
  for (std::size_t k = from + 1; k + 1 < seq.size(); ++k) {
    if (!log_concave_at(seq, k)) return false;
  }
  return true;
}

bool has_mode_at(const SeqVerdict& verdict, std::size_t index) {
  return std::binary_search(verdict.modes.begin(), verdict.modes.end(), index);
}

}  // namespace indseq
