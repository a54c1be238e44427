#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace localgsp {

struct TransportSolution {
  std::vector<double> flows;  // row-major rows x cols
  double cost = 0.0;
  std::size_t pivots = 0;
};

// Balanced transportation problem min sum c_ij f_ij subject to row sums
// `supply`, column sums `demand`, f >= 0, solved exactly by the primal
// network simplex (artificial root, block-search pricing, strongly feasible
// leaving-arc rule). `cost` is row-major. Supplies and demands must agree in
// total up to rounding; a residual above 1e-9 on the artificial arcs raises
// Error{infeasible}.
TransportSolution solve_transport(std::span<const double> supply, std::span<const double> demand,
                                  std::span<const double> cost);

}  // namespace localgsp
