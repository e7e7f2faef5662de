#include "indseq/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <string_view>

#include "indseq/errors.hpp"

namespace indseq {

namespace {

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

// Packs the adjacency of g read in `order` (position -> vertex).
std::vector<std::uint8_t> pack(const Graph& g, const std::vector<int>& order) {
  const int n = g.order();
  const int bits = n * (n - 1) / 2;
  std::vector<std::uint8_t> out(1 + (bits + 7) / 8, 0);
  out[0] = static_cast<std::uint8_t>(n);
  int pos = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++pos) {
      if (g.adjacent(order[i], order[j])) {
        out[1 + pos / 8] |= static_cast<std::uint8_t>(0x80U >> (pos % 8));
      }
    }
  }
  return out;
}

// Splits cells by the number of neighbours each vertex has in every cell
// until the partition is equitable. Sub-cells are ordered by that
// signature, so the result depends only on the isomorphism type of
// (graph, input partition).
void refine(const Graph& g, Partition& cells) {
  std::vector<int> cell_of(g.order());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() < 2) continue;
      std::vector<std::pair<std::vector<int>, int>> keyed;
      keyed.reserve(cells[c].size());
      for (int v : cells[c]) {
        std::vector<int> sig(cells.size(), 0);
        for (VertexSet s = g.neighbors(v); s; s &= s - 1) {
          ++sig[cell_of[std::countr_zero(s)]];
        }
        keyed.emplace_back(std::move(sig), v);
      }
      std::sort(keyed.begin(), keyed.end());
      if (keyed.front().first == keyed.back().first) continue;
      Partition pieces;
      for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
        pieces.back().push_back(keyed[i].second);
      }
      cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
      cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c),
                   pieces.begin(), pieces.end());
      changed = true;
      break;
    }
  }
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g) {}

  std::vector<int> run() {
    Partition root{Cell(g_.order())};
    std::iota(root.front().begin(), root.front().end(), 0);
    std::vector<int> fixed;
    search(std::move(root), fixed);
    return best_order_;
  }

 private:
  void search(Partition cells, std::vector<int>& fixed) {
    refine(g_, cells);
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](const Cell& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const auto target_index = target - cells.begin();
    const Cell members = *target;
    std::vector<int> explored;
    for (int v : members) {
      if (equivalent_to_explored(v, explored, fixed, members)) continue;
      Partition child = cells;
      Cell rest;
      for (int w : members) {
        if (w != v) rest.push_back(w);
      }
      child[target_index] = Cell{v};
      child.insert(child.begin() + target_index + 1, std::move(rest));
      fixed.push_back(v);
      search(std::move(child), fixed);
      fixed.pop_back();
      explored.push_back(v);
    }
  }

  void leaf(const Partition& cells) {
    std::vector<int> order;
    order.reserve(g_.order());
    for (const Cell& c : cells) order.push_back(c.front());
    auto code = pack(g_, order);
    if (best_order_.empty() || best_code_ < code) {
      best_code_ = std::move(code);
      best_order_ = std::move(order);
    } else if (code == best_code_) {
      std::vector<int> gamma(g_.order());
      for (int i = 0; i < g_.order(); ++i) gamma[best_order_[i]] = order[i];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  // Orbit test under the automorphisms found so far that fix the current
  // individualised prefix pointwise.
  bool equivalent_to_explored(int v, const std::vector<int>& explored,
                              const std::vector<int>& fixed,
                              const Cell& members) const {
    if (explored.empty() || automorphisms_.empty()) return false;
    std::vector<int> parent(g_.order());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      const bool fixes = std::all_of(fixed.begin(), fixed.end(),
                                     [&](int f) { return gamma[f] == f; });
      if (!fixes) continue;
      for (int w : members) parent[find(w)] = find(gamma[w]);
    }
    const int root = find(v);
    return std::any_of(explored.begin(), explored.end(),
                       [&](int u) { return find(u) == root; });
  }

  const Graph& g_;
  std::vector<std::uint8_t> best_code_;
  std::vector<int> best_order_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

std::string CanonicalCode::hex() const {
  static constexpr std::string_view digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

std::size_t CanonicalCodeHash::operator()(const CanonicalCode& c) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (std::uint8_t b : c.bytes) h = (h ^ b) * 1099511628211ULL;
  return h;
}

CanonicalCode labeled_code(const Graph& g) {
  std::vector<int> identity(g.order());
  std::iota(identity.begin(), identity.end(), 0);
  return CanonicalCode{pack(g, identity)};
}

Graph graph_from_code(const CanonicalCode& code) {
  if (code.bytes.empty()) throw ParseError("empty canonical code");
  const int n = code.bytes[0];
  if (static_cast<int>(code.bytes.size()) != 1 + (n * (n - 1) / 2 + 7) / 8) {
    throw ParseError("canonical code has the wrong length");
  }
  std::vector<Edge> edges;
  int pos = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++pos) {
      if (code.bytes[1 + pos / 8] & (0x80U >> (pos % 8))) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

std::vector<int> canonical_labeling(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw PreconditionError("canonical labeling supports at most 16 vertices");
  }
  const auto order = Canonicalizer(g).run();
  std::vector<int> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[order[i]] = i;
  return perm;
}

Graph canonical_form(const Graph& g) {
  const auto perm = canonical_labeling(g);
  return g.relabel(perm);
}

CanonicalCode canonical(const Graph& g) {
  return labeled_code(canonical_form(g));
}

}  // namespace indseq
