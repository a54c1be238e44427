#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "localgsp/ball.hpp"
#include "localgsp/graph.hpp"
#include "localgsp/gso.hpp"
#include "localgsp/parallel.hpp"

namespace localgsp {

// H(S) = sum_k taps[k] S^k; K = taps.size() - 1.
struct Filter {
  std::vector<double> taps;
  GsoKind kind = GsoKind::laplacian;

  std::size_t order() const { return taps.size() - 1; }
};

// Validates taps (non-empty, finite).
Filter make_filter(std::vector<double> taps, GsoKind kind = GsoKind::laplacian);

// Filter JSON: {"taps": [...], "gso": "laplacian" | "adjacency" | "weighted-laplacian"}.
Filter filter_from_json(const nlohmann::json& doc);
nlohmann::json filter_to_json(const Filter& f);

std::vector<double> apply_filter(const Filter& f, const ShiftOperator& s,
                                 std::span<const double> x);

// [H(S_ball) x_ball]_root on the ball alone. Requires ball.depth >= K.
double local_filter_value(const Filter& f, const SignalizedBall& ball);

// local_filter_value at every node of g, one extracted K-ball per node.
std::vector<double> local_filter_outputs(const Filter& f, const Graph& g,
                                         Backend backend = Backend::openmp);

// map[v] is the image of node v of g in g2. True iff every signalized K-ball
// of g is isomorphic to the one at its image. Throws Error{map_not_total}
// when the map does not cover V(g).
bool verify_k_morphism(const Graph& g, const Graph& g2, std::span<const NodeId> map,
                       std::size_t K, Backend backend = Backend::openmp);

// J = (1/n) ||x - Hx||^2 + (sigma2/n) ||H||_F^2.
double mse_summary_global(const Filter& f, double sigma2, const Graph& g,
                          Backend backend = Backend::openmp);

// J_hat = (x_r - [Hx]_r)^2 + sigma2 ||H delta_r||^2 on a ball of depth >= 2K.
double mse_summary_local(const Filter& f, double sigma2, const SignalizedBall& ball);

}  // namespace localgsp
