#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace localgsp {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite simple undirected graph with optional nonnegative edge weights and
// an optional real node signal. Immutable once built; construct through
// build_graph(), which validates every invariant.
//
// Edges keep the order and orientation they were given in (weights are
// aligned with them), so serialization round-trips exactly. Adjacency lists
// are sorted by node id.
class Graph {
 public:
  Graph() = default;

  std::size_t num_nodes() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  // Edge ids aligned with neighbors(v).
  std::span<const EdgeId> incident_edges(NodeId v) const {
    return {incident_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const { return max_degree_; }

  bool is_weighted() const { return weights_.has_value(); }
  std::span<const double> weights() const {
    return weights_ ? std::span<const double>(*weights_) : std::span<const double>();
  }
  // Weight of edge e; 1 for unweighted graphs.
  double weight(EdgeId e) const { return weights_ ? (*weights_)[e] : 1.0; }
  double weighted_degree(NodeId v) const;
  double max_weighted_degree() const;

  bool has_signal() const { return signal_.has_value(); }
  std::span<const double> signal() const {
    return signal_ ? std::span<const double>(*signal_) : std::span<const double>();
  }
  // Signal, or the zero signal when none is attached.
  std::vector<double> signal_or_zero() const;

  std::optional<EdgeId> find_edge(NodeId u, NodeId v) const;
  bool adjacent(NodeId u, NodeId v) const { return find_edge(u, v).has_value(); }

  // Original labels when the graph was ingested from a labelled edge list.
  const std::vector<std::string>& labels() const { return labels_; }

  Graph with_signal(std::vector<double> signal) const;
  Graph without_signal() const;
  Graph with_labels(std::vector<std::string> labels) const;

  friend Graph build_graph(std::size_t n, std::vector<Edge> edges,
                           std::optional<std::vector<double>> weights,
                           std::optional<std::vector<double>> signal);

 private:
  std::vector<Edge> edges_;
  std::optional<std::vector<double>> weights_;
  std::optional<std::vector<double>> signal_;
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adjacency_;
  std::vector<EdgeId> incident_;
  std::size_t max_degree_ = 0;
  std::vector<std::string> labels_;
};

// Throws Error{self_loop | node_out_of_range | duplicate_edge |
// weight_count_mismatch | negative_weight | signal_length_mismatch |
// non_finite_value}.
Graph build_graph(std::size_t n, std::vector<Edge> edges,
                  std::optional<std::vector<double>> weights = std::nullopt,
                  std::optional<std::vector<double>> signal = std::nullopt);

// N^k(seed): the seed set together with every node within k hops of it.
// Returned sorted ascending.
std::vector<NodeId> k_hop_neighborhood(const Graph& g, std::span<const NodeId> seed,
                                       std::size_t k);

// Graph with node v renamed perm[v]; weights follow their edges and the
// signal is permuted alongside.
Graph relabel(const Graph& g, std::span<const NodeId> perm);

// Disjoint union of g with itself (node v + n is the copy of v).
Graph disjoint_double(const Graph& g);

}  // namespace localgsp
