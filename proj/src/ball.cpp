#include "localgsp/ball.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "localgsp/error.hpp"

namespace localgsp {

std::vector<std::size_t> bfs_distances(const Graph& g, NodeId root) {
  std::vector<std::size_t> dist(g.num_nodes(), SIZE_MAX);
  std::vector<NodeId> queue{root};
  dist[root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    for (NodeId u : g.neighbors(v)) {
      if (dist[u] == SIZE_MAX) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

SignalizedBall extract_rooted_ball(const Graph& g, NodeId root, std::size_t depth) {
  if (root >= g.num_nodes()) {
    throw Error(Errc::node_out_of_range, "root " + std::to_string(root) + " with n=" +
                                             std::to_string(g.num_nodes()));
  }
  const NodeId seed[] = {root};
  std::vector<NodeId> members = k_hop_neighborhood(g, seed, depth);

  auto local_id = [&members](NodeId v) -> std::int64_t {
    auto it = std::lower_bound(members.begin(), members.end(), v);
    if (it == members.end() || *it != v) return -1;
    return it - members.begin();
  };

  std::vector<Edge> edges;
  std::vector<double> weights;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const NodeId v = members[i];
    auto nbrs = g.neighbors(v);
    auto ids = g.incident_edges(v);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      if (nbrs[k] <= v) continue;
      const std::int64_t j = local_id(nbrs[k]);
      if (j < 0) continue;
      edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
      if (g.is_weighted()) weights.push_back(g.weight(ids[k]));
    }
  }

  std::vector<double> signal(members.size(), 0.0);
  if (g.has_signal()) {
    for (std::size_t i = 0; i < members.size(); ++i) signal[i] = g.signal()[members[i]];
  }

  SignalizedBall ball;
  std::optional<std::vector<double>> maybe_weights;
  if (g.is_weighted()) maybe_weights = std::move(weights);
  ball.graph = build_graph(members.size(), std::move(edges), std::move(maybe_weights),
                           std::move(signal));
  ball.root = static_cast<NodeId>(local_id(root));
  ball.depth = depth;
  ball.origin = std::move(members);
  return ball;
}

}  // namespace localgsp
