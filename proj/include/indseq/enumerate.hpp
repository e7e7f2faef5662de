#pragma once

#include <functional>
#include <vector>

#include "indseq/graph.hpp"

namespace indseq {

inline constexpr int kEnumerationHardWall = 10;

struct EnumerationOptions {
  // Largest n accepted; raising it past kEnumerationHardWall is an error.
  int max_order = 8;
  // The stream is split at the subtrees rooted at graphs with
  // kShardDepth edges; shard s of k takes every k-th such subtree, and
  // shard 0 also emits the few graphs above that depth.
  int shard = 0;
  int shards = 1;
};

inline constexpr int kShardDepth = 4;

// Visits one representative of every isomorphism class of graphs on n
// vertices with minimum degree >= delta. Classes are generated orderly
// (Read/Faradzev): a graph is kept iff its column-wise upper-triangle code
// is maximal over all relabelings, and children add one edge after the
// last one present. Order is deterministic for fixed options.
void enumerate_graphs(int n, int delta,
                      const std::function<void(const Graph&)>& visit,
                      const EnumerationOptions& options = {});

std::vector<Graph> enumerate_all(int n, int delta,
                                 const EnumerationOptions& options = {});

}  // namespace indseq
