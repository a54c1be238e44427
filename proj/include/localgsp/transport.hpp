#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "localgsp/ball.hpp"
#include "localgsp/distribution.hpp"
#include "localgsp/parallel.hpp"

namespace localgsp {

// d_C: min(quotient distance, 2C) for points on the same ball, C otherwise.
double ball_metric(const OmegaPoint& a, const OmegaPoint& b, double C);

struct TransportPlan {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> flows;  // row-major
  double cost = 0.0;

  double flow(std::size_t i, std::size_t j) const { return flows[i * cols + j]; }
};

struct WassersteinResult {
  double distance = 0.0;
  TransportPlan plan;
};

// Row-major |mu| x |nu| matrix of d_C between atoms.
std::vector<double> cost_matrix(const BallDistribution& mu, const BallDistribution& nu, double C,
                                Backend backend = Backend::openmp);

// Exact W1(mu, nu; C). Weighted distributions are rejected with
// Error{kind_mismatch}.
WassersteinResult wasserstein1(const BallDistribution& mu, const BallDistribution& nu, double C,
                               Backend backend = Backend::openmp);

// L * W1(mu, nu; 1/L).
double transfer_bound(const BallDistribution& mu, const BallDistribution& nu, double L);

struct TighterBound {
  double value = 0.0;
  double best_C = 1.0;
  std::vector<double> grid;    // C values, ascending, last one exactly 1
  std::vector<double> values;  // (L/C) W1(mu, nu; A C / L) per grid point
};

// Minimum of (L/C) W1(mu, nu; A C / L) over `grid` log-spaced C in
// [1e-6, 1]. An upper bound on the infimum over C in (0, 1].
TighterBound tighter_bound(const BallDistribution& mu, const BallDistribution& nu, double L,
                           double A, std::size_t grid);

using BallSummary = std::function<double(const SignalizedBall&)>;

struct LipschitzEstimate {
  double value = 0.0;
  double radius = 0.0;
  std::size_t pairs = 0;
};

// Largest |J(a) - J(b)| / quotient_distance(a, b) over every pair of
// same-ball atoms of `dist` and `trials` random perturbations (uniform in
// [-radius, radius] per node) of randomly drawn atoms. A lower bound on the
// Lipschitz constant of J.
LipschitzEstimate lipschitz_estimate(const BallSummary& summary, const BallDistribution& dist,
                                     std::size_t trials, std::uint64_t seed, double radius = 0.1);

// Atoms of both distributions with half the mass each (depths must agree).
BallDistribution support_union(const BallDistribution& mu, const BallDistribution& nu);

}  // namespace localgsp
