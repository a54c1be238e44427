#include "localgsp/generators.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "localgsp/error.hpp"
#include "localgsp/rng.hpp"

namespace localgsp {

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({NodeId(i), NodeId(i + 1)});
  return build_graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(Errc::invalid_parameter, "a cycle needs at least 3 nodes");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({NodeId(i), NodeId((i + 1) % n)});
  return build_graph(n, std::move(edges));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({NodeId(i), NodeId(j)});
  }
  return build_graph(n, std::move(edges));
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, NodeId(i)});
  return build_graph(leaves + 1, std::move(edges));
}

Graph random_bounded_degree_graph(std::size_t n, std::size_t max_degree, std::uint64_t seed,
                                  std::size_t attempts) {
  if (n == 0) throw Error(Errc::invalid_parameter, "graph needs at least one node");
  if (attempts == 0) attempts = n * max_degree;
  Rng rng(seed);
  std::vector<std::size_t> degree(n, 0);
  std::set<std::pair<NodeId, NodeId>> seen;
  std::vector<Edge> edges;
  for (std::size_t t = 0; t < attempts && n > 1; ++t) {
    auto u = static_cast<NodeId>(uniform_index(rng, n));
    auto v = static_cast<NodeId>(uniform_index(rng, n));
    if (u == v || degree[u] >= max_degree || degree[v] >= max_degree) continue;
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) continue;
    ++degree[u];
    ++degree[v];
    edges.push_back({u, v});
  }
  return build_graph(n, std::move(edges));
}

Graph with_random_weights(const Graph& g, double lo, double hi, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> weights(g.num_edges());
  for (double& w : weights) w = uniform(rng, lo, hi);
  std::optional<std::vector<double>> signal;
  if (g.has_signal()) signal.emplace(g.signal().begin(), g.signal().end());
  return build_graph(g.num_nodes(), std::vector<Edge>(g.edges().begin(), g.edges().end()),
                     std::move(weights), std::move(signal));
}

std::vector<double> uniform_signal(std::size_t n, double lo, double hi, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> x(n);
  for (double& v : x) v = uniform(rng, lo, hi);
  return x;
}

std::vector<double> sine_signal(std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t v = 0; v < n; ++v) {
    x[v] = std::sin(2.0 * std::numbers::pi * static_cast<double>(v) / static_cast<double>(n));
  }
  return x;
}

}  // namespace localgsp
