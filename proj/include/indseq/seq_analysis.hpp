#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "indseq/ind_poly.hpp"

namespace indseq {

struct SeqVerdict {
  bool unimodal = false;
  // Every index attaining the maximum, ascending.
  std::vector<std::size_t> modes;
  // Smallest s such that (a_t)_{t >= s} is log-concave.
  std::size_t logconcave_from = 0;
  // Largest k with a_0 <= a_1 <= ... <= a_k.
  std::size_t increasing_prefix_len = 0;
  // a_t >= a_{t+1} for every t >= ceil((2L - 1) / 3), L the last index.
  bool decreasing_from_final_third = false;

  friend bool operator==(const SeqVerdict&, const SeqVerdict&) = default;
};

// Requires a nonempty sequence of positive integers (PreconditionError).
SeqVerdict analyze(std::span<const BigInt> seq);
inline SeqVerdict analyze(const CoeffSeq& p) { return analyze(p.coeffs()); }

// a_k^2 >= a_{k-1} a_{k+1} for every from < k < last. Throws
// PreconditionError when from is not an index of seq.
bool is_log_concave(std::span<const BigInt> seq, std::size_t from = 0);

bool has_mode_at(const SeqVerdict& verdict, std::size_t index);

// First index of the final-third chain for a sequence whose last index is L.
std::size_t final_third_start(std::size_t last_index);

// Number of real roots counted with multiplicity, by Sturm sequences over
// the rationals applied to the successive gcd(p, p') tower.
int count_real_roots(std::span<const BigInt> coeffs);

// True iff every root of sum a_t x^t is real. Trailing zero coefficients
// are trimmed and a factor x^m is divided out first; constants count as
// real-rooted.
bool is_real_rooted(std::span<const BigInt> coeffs);
inline bool is_real_rooted(const CoeffSeq& p) { return is_real_rooted(p.coeffs()); }

}  // namespace indseq
