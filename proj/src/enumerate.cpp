#include "indseq/enumerate.hpp"

#include <string>

#include "indseq/errors.hpp"

namespace indseq {

namespace {

// Position of pair (i, j), i < j, in column-wise order:
// (0,1) (0,2) (1,2) (0,3) (1,3) (2,3) ...
constexpr int position(int i, int j) { return j * (j - 1) / 2 + i; }

class OrderlyGenerator {
 public:
  OrderlyGenerator(int n, int delta, const EnumerationOptions& options,
                   const std::function<void(const Graph&)>& visit)
      : n_(n), delta_(delta), options_(options), visit_(visit), rows_(n, 0) {
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) pair_at_.push_back({i, j});
    }
  }

  void run() { grow(-1, 0); }

 private:
  void grow(int last, int depth) {
    bool owned = options_.shard == 0;
    if (depth == kShardDepth) {
      owned = depth_counter_++ % options_.shards == options_.shard;
      if (!owned) return;
      inside_owned_ = true;
    }
    if (inside_owned_ || owned) emit();
    for (int q = last + 1; q < static_cast<int>(pair_at_.size()); ++q) {
      auto [i, j] = pair_at_[q];
      rows_[i] |= VertexSet{1} << j;
      rows_[j] |= VertexSet{1} << i;
      if (is_maximal()) grow(q, depth + 1);
      rows_[i] &= ~(VertexSet{1} << j);
      rows_[j] &= ~(VertexSet{1} << i);
    }
    if (depth == kShardDepth) inside_owned_ = false;
  }

  void emit() {
    for (VertexSet r : rows_) {
      if (popcount(r) < delta_) return;
    }
    visit_(Graph::from_rows(rows_));
  }

  // Column j of the code read under labeling perm (i = 0 most significant).
  unsigned column(const std::vector<int>& perm, int j, int v) const {
    unsigned c = 0;
    for (int i = 0; i < j; ++i) {
      c = (c << 1) | static_cast<unsigned>((rows_[perm[i]] >> v) & 1U);
    }
    return c;
  }

  bool is_maximal() {
    targets_.assign(n_, 0);
    std::vector<int> identity(n_);
    for (int v = 0; v < n_; ++v) identity[v] = v;
    for (int j = 1; j < n_; ++j) targets_[j] = column(identity, j, j);
    perm_.assign(n_, -1);
    for (int v = 0; v < n_; ++v) {
      perm_[0] = v;
      if (!extend(1, VertexSet{1} << v)) return false;
    }
    return true;
  }

  // False iff some completion of perm_[0..j) gives a larger code.
  bool extend(int j, VertexSet used) {
    if (j == n_) return true;
    const VertexSet free = all_vertices(n_) & ~used;
    for (VertexSet s = free; s; s &= s - 1) {
      const int v = std::countr_zero(s);
      const unsigned c = column(perm_, j, v);
      if (c > targets_[j]) return false;
      if (c == targets_[j]) {
        perm_[j] = v;
        if (!extend(j + 1, used | (VertexSet{1} << v))) return false;
      }
    }
    return true;
  }

  int n_;
  int delta_;
  const EnumerationOptions& options_;
  const std::function<void(const Graph&)>& visit_;
  std::vector<VertexSet> rows_;
  std::vector<std::pair<int, int>> pair_at_;
  std::vector<unsigned> targets_;
  std::vector<int> perm_;
  long depth_counter_ = 0;
  bool inside_owned_ = false;
};

}  // namespace

void enumerate_graphs(int n, int delta,
                      const std::function<void(const Graph&)>& visit,
                      const EnumerationOptions& options) {
  if (options.max_order > kEnumerationHardWall) {
    throw PreconditionError("enumeration limit cannot exceed " +
                            std::to_string(kEnumerationHardWall));
  }
  if (n < 1) throw PreconditionError("enumeration needs n >= 1");
  if (n > options.max_order) {
    throw BudgetExceeded("enumeration of n = " + std::to_string(n) +
                         " exceeds the configured limit " +
                         std::to_string(options.max_order));
  }
  if (options.shards < 1 || options.shard < 0 ||
      options.shard >= options.shards) {
    throw PreconditionError("invalid shard selection");
  }
  OrderlyGenerator(n, delta, options, visit).run();
}

std::vector<Graph> enumerate_all(int n, int delta,
                                 const EnumerationOptions& options) {
  std::vector<Graph> out;
  enumerate_graphs(n, delta, [&](const Graph& g) { out.push_back(g); }, options);
  return out;
}

}  // namespace indseq
