#pragma once

#include <cstdint>

#include "indseq/graph.hpp"

namespace indseq {

struct RngSpec {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

// Counter-based generator: the i-th output of stream (seed, stream) is
// mix(key + (i + 1) * golden) with key = mix(seed ^ mix(stream + golden)),
// where mix is the SplitMix64 finaliser. Pure integer arithmetic, so the
// sequence is identical on every platform and any draw can be addressed
// directly.
class CounterRng {
 public:
  explicit CounterRng(RngSpec spec);

  std::uint64_t at(std::uint64_t index) const;
  std::uint64_t next() { return at(counter_++); }
  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// G(n, n, p): pair (e_u, o_v) is an edge iff draw u*n + v of the stream is
// below p. n <= 32.
BipartiteGraph sample_bipartite(int n, double p, RngSpec rng);

// G(n, p) on n <= 64 vertices, pairs drawn in row order (u < v).
Graph sample_graph(int n, double p, RngSpec rng);

}  // namespace indseq
