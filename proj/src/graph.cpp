#include "indseq/graph.hpp"

#include <algorithm>
#include <string>

#include "indseq/errors.hpp"

namespace indseq {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw PreconditionError("vertex count " + std::to_string(n) +
                            " outside [1, 64]");
  }
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges) {
  check_order(n);
  rows_.assign(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw PreconditionError("edge endpoint out of range: " +
                              std::to_string(u) + "-" + std::to_string(v));
    }
    if (u == v) {
      throw PreconditionError("loop at vertex " + std::to_string(u));
    }
    rows_[u] |= VertexSet{1} << v;
    rows_[v] |= VertexSet{1} << u;
  }
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const VertexSet mask = all_vertices(n);
  for (int u = 0; u < n; ++u) {
    if (rows[u] & ~mask) throw PreconditionError("row uses bits beyond n");
    if ((rows[u] >> u) & 1U) throw PreconditionError("loop in adjacency rows");
    for (VertexSet s = rows[u]; s; s &= s - 1) {
      const int v = std::countr_zero(s);
      if (!((rows[v] >> u) & 1U)) {
        throw PreconditionError("adjacency rows are not symmetric");
      }
    }
  }
  return Graph(std::move(rows));
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet r : rows_) twice += popcount(r);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (VertexSet s = rows_[u] & ~all_vertices(u + 1); s; s &= s - 1) {
      out.emplace_back(u, std::countr_zero(s));
    }
  }
  return out;
}

Graph Graph::relabel(std::span<const int> perm) const {
  std::vector<VertexSet> rows(rows_.size(), 0);
  for (int u = 0; u < order(); ++u) {
    VertexSet r = 0;
    for (VertexSet s = rows_[u]; s; s &= s - 1) {
      r |= VertexSet{1} << perm[std::countr_zero(s)];
    }
    rows[perm[u]] = r;
  }
  return Graph(std::move(rows));
}

Graph build(int n, std::span<const Edge> edges) { return Graph(n, edges); }

Graph build(int n, std::initializer_list<Edge> edges) {
  return Graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph path(int n) {
  check_order(n);
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  check_order(n);
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph(n, e);
}

Graph complete(int n) {
  check_order(n);
  std::vector<VertexSet> rows(n);
  for (int v = 0; v < n; ++v) {
    rows[v] = all_vertices(n) & ~(VertexSet{1} << v);
  }
  return Graph::from_rows(std::move(rows));
}

Graph empty(int n) {
  check_order(n);
  return Graph::from_rows(std::vector<VertexSet>(n, 0));
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) {
    throw PreconditionError("complete_bipartite needs both parts nonempty");
  }
  return join(empty(a), empty(b));
}

Graph star(int n) {
  if (n < 2) throw PreconditionError("star needs at least 2 vertices");
  return complete_bipartite(1, n - 1);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > kMaxVertices) throw PreconditionError("union exceeds 64 vertices");
  std::vector<VertexSet> rows(g.rows());
  for (VertexSet r : h.rows()) rows.push_back(r << g.order());
  return Graph::from_rows(std::move(rows));
}

Graph join(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > kMaxVertices) throw PreconditionError("join exceeds 64 vertices");
  const VertexSet g_side = all_vertices(g.order());
  const VertexSet h_side = all_vertices(n) & ~g_side;
  std::vector<VertexSet> rows;
  rows.reserve(n);
  for (VertexSet r : g.rows()) rows.push_back(r | h_side);
  for (VertexSet r : h.rows()) rows.push_back((r << g.order()) | g_side);
  return Graph::from_rows(std::move(rows));
}

int min_degree(const Graph& g) {
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

VertexSet component_of(const Graph& g, int start, VertexSet within) {
  VertexSet seen = VertexSet{1} << start;
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet s = frontier; s; s &= s - 1) {
      next |= g.neighbors(std::countr_zero(s));
    }
    frontier = next & within & ~seen;
    seen |= frontier;
  }
  return seen;
}

bool is_connected(const Graph& g) {
  const VertexSet all = all_vertices(g.order());
  return component_of(g, 0, all) == all;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  std::vector<int> stack;
  for (int root = 0; root < g.order(); ++root) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (VertexSet s = g.neighbors(u); s; s &= s - 1) {
        const int v = std::countr_zero(s);
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          stack.push_back(v);
        } else if (colour[v] == colour[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

BipartiteGraph::BipartiteGraph(int n, std::vector<VertexSet> rows)
    : rows_(std::move(rows)) {
  if (n < 1 || n > kMaxSide) {
    throw PreconditionError("bipartite side " + std::to_string(n) +
                            " outside [1, 32]");
  }
  if (static_cast<int>(rows_.size()) != n) {
    throw PreconditionError("bipartite graph needs exactly n rows");
  }
  for (VertexSet r : rows_) {
    if (r & ~all_vertices(n)) throw PreconditionError("row uses bits beyond n");
  }
}

BipartiteGraph BipartiteGraph::complete(int n) {
  return BipartiteGraph(n, std::vector<VertexSet>(n, all_vertices(n)));
}

BipartiteGraph BipartiteGraph::empty(int n) {
  return BipartiteGraph(n, std::vector<VertexSet>(n, 0));
}

BipartiteGraph BipartiteGraph::perfect_matching(int n) {
  std::vector<VertexSet> rows(n > 0 ? n : 0);
  for (int u = 0; u < n; ++u) rows[u] = VertexSet{1} << u;
  return BipartiteGraph(n, std::move(rows));
}

int BipartiteGraph::edge_count() const {
  int total = 0;
  for (VertexSet r : rows_) total += popcount(r);
  return total;
}

std::vector<VertexSet> BipartiteGraph::transposed_rows() const {
  std::vector<VertexSet> cols(rows_.size(), 0);
  for (int u = 0; u < side(); ++u) {
    for (VertexSet s = rows_[u]; s; s &= s - 1) {
      cols[std::countr_zero(s)] |= VertexSet{1} << u;
    }
  }
  return cols;
}

Graph BipartiteGraph::to_graph() const {
  const int n = side();
  std::vector<VertexSet> rows(2 * n, 0);
  const auto cols = transposed_rows();
  for (int u = 0; u < n; ++u) {
    rows[u] = rows_[u] << n;
    rows[n + u] = cols[u];
  }
  return Graph::from_rows(std::move(rows));
}

namespace {

// Kuhn's augmenting path step from E-vertex u.
bool augment(const BipartiteGraph& b, int u, VertexSet& visited,
             std::vector<int>& match_of_o) {
  for (VertexSet s = b.rows()[u] & ~visited; s; s &= s - 1) {
    const int o = std::countr_zero(s);
    visited |= VertexSet{1} << o;
    if (match_of_o[o] < 0 || augment(b, match_of_o[o], visited, match_of_o)) {
      match_of_o[o] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

bool has_perfect_matching(const BipartiteGraph& b) {
  std::vector<int> match_of_o(b.side(), -1);
  for (int u = 0; u < b.side(); ++u) {
    VertexSet visited = 0;
    if (!augment(b, u, visited, match_of_o)) return false;
  }
  return true;
}

}  // namespace indseq
