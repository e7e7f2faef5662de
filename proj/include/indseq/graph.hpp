#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace indseq {

// A set of vertices of a graph with at most 64 vertices; bit v is vertex v.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet all_vertices(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr int popcount(VertexSet s) { return std::popcount(s); }

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1, stored as adjacency bitsets.
// Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Throws PreconditionError unless 1 <= n <= 64 and every endpoint is in
  // range; loops are rejected, duplicate edges collapse.
  Graph(int n, std::span<const Edge> edges);

  // Rows must be symmetric, loop free and use only the low n bits.
  static Graph from_rows(std::vector<VertexSet> rows);

  int order() const { return static_cast<int>(rows_.size()); }
  VertexSet neighbors(int v) const { return rows_[v]; }
  const std::vector<VertexSet>& rows() const { return rows_; }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  int degree(int v) const { return popcount(rows_[v]); }
  int edge_count() const;
  std::vector<Edge> edges() const;

  // Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabel(std::span<const int> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::vector<VertexSet> rows) : rows_(std::move(rows)) {}

  std::vector<VertexSet> rows_;
};

Graph build(int n, std::span<const Edge> edges);
Graph build(int n, std::initializer_list<Edge> edges);

// Families. Vertex orderings:
//   path, cycle: 0-1-2-...-(n-1) (cycle closes n-1 to 0);
//   complete_bipartite(a, b): parts {0..a-1} and {a..a+b-1};
//   star(n) = complete_bipartite(1, n-1), centre 0.
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph empty(int n);
Graph complete_bipartite(int a, int b);
Graph star(int n);

// G's vertices keep their labels, H's are shifted by G.order().
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

int min_degree(const Graph& g);
int max_degree(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// Connected component of `start` inside the induced subgraph on `within`.
VertexSet component_of(const Graph& g, int start, VertexSet within);

// Balanced bipartite graph with sides E = {e_0..e_{n-1}} and
// O = {o_0..o_{n-1}}; row u holds the O-neighbours of e_u.
class BipartiteGraph {
 public:
  static constexpr int kMaxSide = 32;

  BipartiteGraph() = default;
  // Throws PreconditionError unless 1 <= n <= 32 and rows fit in n bits.
  BipartiteGraph(int n, std::vector<VertexSet> rows);

  static BipartiteGraph complete(int n);
  static BipartiteGraph empty(int n);
  static BipartiteGraph perfect_matching(int n);

  int side() const { return static_cast<int>(rows_.size()); }
  const std::vector<VertexSet>& rows() const { return rows_; }
  bool adjacent(int e, int o) const { return (rows_[e] >> o) & 1U; }
  int edge_count() const;

  // Rows indexed by O: the E-neighbours of each o_v.
  std::vector<VertexSet> transposed_rows() const;

  // Graph on 2n vertices: e_u is vertex u, o_v is vertex n + v.
  Graph to_graph() const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  std::vector<VertexSet> rows_;
};

bool has_perfect_matching(const BipartiteGraph& b);

}  // namespace indseq
