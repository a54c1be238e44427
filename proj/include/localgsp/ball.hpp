#pragma once

#include <cstddef>
#include <vector>

#include "localgsp/graph.hpp"

namespace localgsp {

// A rooted k-ball with its restricted signal (and weights, when the parent
// graph is weighted). `graph` always carries a signal.
//
// Balls extracted from a parent graph number their nodes in ascending parent
// id, so per-row sums in a shift operator visit neighbors in the same order
// as in the parent. `origin[i]` is the parent id of local node i (empty for
// balls that were not extracted, e.g. decoded from a canonical code).
struct SignalizedBall {
  Graph graph;
  NodeId root = 0;
  std::size_t depth = 0;
  std::vector<NodeId> origin;

  std::size_t size() const { return graph.num_nodes(); }
  double root_value() const { return graph.signal()[root]; }
};

// Induced subgraph on N^K(r) with the restricted signal and weights. Graphs
// without a signal contribute the zero signal.
SignalizedBall extract_rooted_ball(const Graph& g, NodeId root, std::size_t depth);

// Hop distance from `root` to every node (SIZE_MAX when unreachable).
std::vector<std::size_t> bfs_distances(const Graph& g, NodeId root);

}  // namespace localgsp
