#pragma once

// Exhaustive permutation oracles for small rooted graphs.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "localgsp/graph.hpp"

namespace oracle {

using localgsp::Graph;
using localgsp::NodeId;

inline std::vector<std::vector<double>> weight_matrix(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<std::vector<double>> w(n, std::vector<double>(n, -1.0));
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto edge = g.edges()[e];
    w[edge.u][edge.v] = w[edge.v][edge.u] = g.weight(static_cast<localgsp::EdgeId>(e));
  }
  return w;
}

// Calls visit(perm) for every bijection of {0..n-1} with perm[ra] = rb.
template <class Visit>
void for_each_rooted_bijection(std::size_t n, NodeId ra, NodeId rb, Visit&& visit) {
  std::vector<NodeId> rest_a, rest_b;
  for (NodeId v = 0; v < n; ++v) {
    if (v != ra) rest_a.push_back(v);
    if (v != rb) rest_b.push_back(v);
  }
  std::vector<NodeId> perm(n);
  perm[ra] = rb;
  do {
    for (std::size_t i = 0; i < rest_a.size(); ++i) perm[rest_a[i]] = rest_b[i];
    if (!visit(perm)) return;
  } while (std::next_permutation(rest_b.begin(), rest_b.end()));
}

inline bool preserves(const std::vector<std::vector<double>>& wa,
                      const std::vector<std::vector<double>>& wb, std::span<const NodeId> perm) {
  const std::size_t n = wa.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (wa[u][v] != wb[perm[u]][perm[v]]) return false;
    }
  }
  return true;
}

// True iff some root-preserving bijection maps edges (and weights) onto edges.
inline bool rooted_isomorphic(const Graph& a, NodeId ra, const Graph& b, NodeId rb) {
  if (a.num_nodes() != b.num_nodes() || a.num_edges() != b.num_edges()) return false;
  if (a.is_weighted() != b.is_weighted()) return false;
  const auto wa = weight_matrix(a);
  const auto wb = weight_matrix(b);
  bool found = false;
  for_each_rooted_bijection(a.num_nodes(), ra, rb, [&](const std::vector<NodeId>& perm) {
    found = preserves(wa, wb, perm);
    return !found;
  });
  return found;
}

inline std::vector<std::vector<NodeId>> automorphisms(const Graph& g, NodeId root) {
  const auto w = weight_matrix(g);
  std::vector<std::vector<NodeId>> out;
  for_each_rooted_bijection(g.num_nodes(), root, root, [&](const std::vector<NodeId>& perm) {
    if (preserves(w, w, perm)) out.push_back(perm);
    return true;
  });
  return out;
}

// min over automorphisms phi of ||x o phi - y||_2 where (x o phi)[v] = x[phi[v]].
inline double quotient_distance(const Graph& g, NodeId root, std::span<const double> x,
                                std::span<const double> y) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& perm : oracle::automorphisms(g, root)) {
    double s = 0.0;
    for (std::size_t v = 0; v < x.size(); ++v) {
      const double d = x[perm[v]] - y[v];
      s += d * d;
    }
    best = std::min(best, std::sqrt(s));
  }
  return best;
}

}  // namespace oracle
