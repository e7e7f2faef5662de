#include "indseq/random.hpp"

#include <string>
#include <vector>

#include "indseq/errors.hpp"

namespace indseq {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw PreconditionError("edge probability must lie in [0, 1]");
  }
}

}  // namespace

CounterRng::CounterRng(RngSpec spec)
    : key_(mix(spec.seed ^ mix(spec.stream + kGolden))) {}

std::uint64_t CounterRng::at(std::uint64_t index) const {
  return mix(key_ + (index + 1) * kGolden);
}

BipartiteGraph sample_bipartite(int n, double p, RngSpec rng) {
  if (n < 1 || n > BipartiteGraph::kMaxSide) {
    throw PreconditionError("side size " + std::to_string(n) +
                            " outside [1, 32]");
  }
  check_probability(p);
  CounterRng gen(rng);
  std::vector<VertexSet> rows(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (gen.uniform() < p) rows[u] |= VertexSet{1} << v;
    }
  }
  return BipartiteGraph(n, std::move(rows));
}

Graph sample_graph(int n, double p, RngSpec rng) {
  check_probability(p);
  CounterRng gen(rng);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (gen.uniform() < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

}  // namespace indseq
