#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "localgsp/ball.hpp"
#include "localgsp/distribution.hpp"
#include "localgsp/graph.hpp"
#include "localgsp/gso.hpp"
#include "localgsp/parallel.hpp"

namespace localgsp {

struct EigenSystem {
  std::size_t n = 0;
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column-major n x n, column j pairs with values[j]

  double vector_entry(std::size_t row, std::size_t col) const { return vectors[col * n + row]; }
};

// Dense symmetric eigendecomposition. Each eigenvector's first nonzero entry
// is positive; Laplacian eigenvalues are clamped at 0 from below. Throws
// Error{non_symmetric}.
EigenSystem eigendecompose(const ShiftOperator& s);

// x_tilde_j = <x, u_j>.
std::vector<double> graph_fourier_transform(const EigenSystem& eig, std::span<const double> x);

struct SpectralJump {
  double lambda = 0.0;
  double mass = 0.0;
};

struct SpectralDistribution {
  std::vector<SpectralJump> jumps;  // lambda ascending
  double total_mass = 0.0;
  double support_upper = 0.0;      // 2 * (weighted) max degree

  // P_x(lambda): mass of jumps at or below lambda.
  double cdf(double lambda) const;
  double moment(std::size_t k) const;
};

// Normalized power spectral distribution of the graph's signal under its
// (weighted) Laplacian.
SpectralDistribution psd(const Graph& g);
SpectralDistribution psd(const Graph& g, const EigenSystem& eig);

// (1/n) <x, S^K x> via K sparse products.
double moment_global(const Graph& g, std::size_t K);

// x_r [S_ball^K x]_r with S_ball the (weighted) Laplacian of the ball and K
// the ball depth; the second form takes an order K <= depth.
double moment_local(const SignalizedBall& ball);
double moment_local(const SignalizedBall& ball, std::size_t K);

// (1/n) sum_v moment_local(ball_K(v)).
double moment_local_average(const Graph& g, std::size_t K, Backend backend = Backend::openmp);

// sum over atoms of mass * moment_local(atom), order dist.K or M <= dist.K.
double moment_via_distribution(const BallDistribution& dist);
double moment_via_distribution(const BallDistribution& dist, std::size_t M);

// L1 distance between the step CDFs over [0, upper], where upper covers both
// supports and any difference in total mass is placed at upper.
double psd_weak_distance(const SpectralDistribution& p, const SpectralDistribution& q);

}  // namespace localgsp
