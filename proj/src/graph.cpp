#include "localgsp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "localgsp/error.hpp"

namespace localgsp {

namespace {

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

Graph build_graph(std::size_t n, std::vector<Edge> edges,
                  std::optional<std::vector<double>> weights,
                  std::optional<std::vector<double>> signal) {
  if (n > UINT32_MAX) throw Error(Errc::invalid_parameter, "node count too large");
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(Errc::node_out_of_range,
                  "edge " + edge_text(e) + " with n=" + std::to_string(n));
    }
    if (e.u == e.v) throw Error(Errc::self_loop, "edge " + edge_text(e));
  }
  if (weights) {
    if (weights->size() != edges.size()) {
      throw Error(Errc::weight_count_mismatch,
                  std::to_string(weights->size()) + " weights for " +
                      std::to_string(edges.size()) + " edges");
    }
    for (double& w : *weights) {
      if (!std::isfinite(w)) throw Error(Errc::non_finite_value, "edge weight");
      if (w < 0.0) throw Error(Errc::negative_weight, std::to_string(w));
      if (w == 0.0) w = 0.0;  // drop the sign of -0.0
    }
  }
  if (signal) {
    if (signal->size() != n) {
      throw Error(Errc::signal_length_mismatch,
                  std::to_string(signal->size()) + " values for n=" + std::to_string(n));
    }
    for (double x : *signal) {
      if (!std::isfinite(x)) throw Error(Errc::non_finite_value, "signal value");
    }
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());

  struct Slot {
    NodeId nbr;
    EdgeId edge;
  };
  std::vector<Slot> slots(2 * edges.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId id = 0; id < edges.size(); ++id) {
    const Edge& e = edges[id];
    slots[fill[e.u]++] = {e.v, id};
    slots[fill[e.v]++] = {e.u, id};
  }
  g.adjacency_.resize(slots.size());
  g.incident_.resize(slots.size());
  for (std::size_t v = 0; v < n; ++v) {
    auto begin = slots.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto end = slots.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(begin, end, [](const Slot& a, const Slot& b) { return a.nbr < b.nbr; });
    for (auto it = begin; it != end; ++it) {
      if (it != begin && (it - 1)->nbr == it->nbr) {
        throw Error(Errc::duplicate_edge,
                    "edge " + edge_text(Edge{static_cast<NodeId>(v), it->nbr}));
      }
      const auto pos = static_cast<std::size_t>(it - slots.begin());
      g.adjacency_[pos] = it->nbr;
      g.incident_[pos] = it->edge;
    }
    g.max_degree_ = std::max(g.max_degree_, g.offsets_[v + 1] - g.offsets_[v]);
  }
  g.edges_ = std::move(edges);
  g.weights_ = std::move(weights);
  g.signal_ = std::move(signal);
  return g;
}

double Graph::weighted_degree(NodeId v) const {
  double sum = 0.0;
  for (EdgeId e : incident_edges(v)) sum += weight(e);
  return sum;
}

double Graph::max_weighted_degree() const {
  double best = 0.0;
  for (NodeId v = 0; v < num_nodes(); ++v) best = std::max(best, weighted_degree(v));
  return best;
}

std::vector<double> Graph::signal_or_zero() const {
  if (signal_) return *signal_;
  return std::vector<double>(num_nodes(), 0.0);
}

std::optional<EdgeId> Graph::find_edge(NodeId u, NodeId v) const {
  if (u >= num_nodes() || v >= num_nodes()) return std::nullopt;
  auto nbrs = neighbors(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return std::nullopt;
  return incident_edges(u)[static_cast<std::size_t>(it - nbrs.begin())];
}

Graph Graph::with_signal(std::vector<double> signal) const {
  return build_graph(num_nodes(), edges_, weights_, std::move(signal)).with_labels(labels_);
}

Graph Graph::without_signal() const {
  Graph g = *this;
  g.signal_.reset();
  return g;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != num_nodes()) {
    throw Error(Errc::dimension_mismatch, "label count differs from node count");
  }
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

std::vector<NodeId> k_hop_neighborhood(const Graph& g, std::span<const NodeId> seed,
                                       std::size_t k) {
  const std::size_t n = g.num_nodes();
  std::vector<char> in_set(n, 0);
  std::vector<NodeId> frontier;
  for (NodeId v : seed) {
    if (v >= n) {
      throw Error(Errc::node_out_of_range,
                  "seed node " + std::to_string(v) + " with n=" + std::to_string(n));
    }
    if (!in_set[v]) {
      in_set[v] = 1;
      frontier.push_back(v);
    }
  }
  std::vector<NodeId> result = frontier;
  for (std::size_t step = 0; step < k && !frontier.empty(); ++step) {
    std::vector<NodeId> next;
    for (NodeId v : frontier) {
      for (NodeId u : g.neighbors(v)) {
        if (!in_set[u]) {
          in_set[u] = 1;
          next.push_back(u);
        }
      }
    }
    result.insert(result.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

Graph relabel(const Graph& g, std::span<const NodeId> perm) {
  const std::size_t n = g.num_nodes();
  if (perm.size() != n) throw Error(Errc::dimension_mismatch, "permutation length");
  std::vector<char> seen(n, 0);
  for (NodeId p : perm) {
    if (p >= n || seen[p]) throw Error(Errc::invalid_parameter, "not a permutation");
    seen[p] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  std::optional<std::vector<double>> weights;
  if (g.is_weighted()) weights.emplace(g.weights().begin(), g.weights().end());
  std::optional<std::vector<double>> signal;
  if (g.has_signal()) {
    signal.emplace(n);
    for (NodeId v = 0; v < n; ++v) (*signal)[perm[v]] = g.signal()[v];
  }
  return build_graph(n, std::move(edges), std::move(weights), std::move(signal));
}

Graph disjoint_double(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const Edge& e : g.edges()) {
    edges.push_back({static_cast<NodeId>(e.u + n), static_cast<NodeId>(e.v + n)});
  }
  std::optional<std::vector<double>> weights;
  if (g.is_weighted()) {
    weights.emplace(g.weights().begin(), g.weights().end());
    weights->insert(weights->end(), g.weights().begin(), g.weights().end());
  }
  std::optional<std::vector<double>> signal;
  if (g.has_signal()) {
    signal.emplace(g.signal().begin(), g.signal().end());
    signal->insert(signal->end(), g.signal().begin(), g.signal().end());
  }
  return build_graph(2 * n, std::move(edges), std::move(weights), std::move(signal));
}

}  // namespace localgsp
