#pragma once

// Minimum over every basic feasible plan of a small transportation problem.
// Each basis is a spanning tree of the bipartite row/column graph; its flow
// follows by peeling leaves.

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace oracle {

inline double brute_transport(const std::vector<double>& supply, const std::vector<double>& demand,
                              const std::vector<double>& cost) {
  const std::size_t m = supply.size();
  const std::size_t n = demand.size();
  const std::size_t cells = m * n;
  const std::size_t basis = m + n - 1;
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> pick(basis);
  for (std::size_t i = 0; i < basis; ++i) pick[i] = i;
  while (true) {
    std::vector<double> row_left = supply;
    std::vector<double> col_left = demand;
    std::vector<bool> assigned(basis, false);
    std::vector<double> flow(basis, 0.0);
    std::size_t done = 0;
    bool progress = true;
    while (progress && done < basis) {
      progress = false;
      for (std::size_t node = 0; node < m + n; ++node) {
        std::size_t open = 0, last = 0;
        for (std::size_t k = 0; k < basis; ++k) {
          if (assigned[k]) continue;
          const std::size_t i = pick[k] / n, j = pick[k] % n;
          if ((node < m && i == node) || (node >= m && j == node - m)) {
            ++open;
            last = k;
          }
        }
        if (open != 1) continue;
        const std::size_t i = pick[last] / n, j = pick[last] % n;
        const double f = node < m ? row_left[i] : col_left[j];
        flow[last] = f;
        row_left[i] -= f;
        col_left[j] -= f;
        assigned[last] = true;
        ++done;
        progress = true;
      }
    }
    if (done == basis) {
      bool feasible = true;
      double total = 0.0;
      for (std::size_t k = 0; k < basis; ++k) {
        if (flow[k] < -1e-12) feasible = false;
        total += flow[k] * cost[pick[k]];
      }
      for (double r : row_left) feasible = feasible && std::abs(r) <= 1e-12;
      for (double c : col_left) feasible = feasible && std::abs(c) <= 1e-12;
      if (feasible && total < best) best = total;
    }
    std::size_t k = basis;
    while (k > 0 && pick[k - 1] == cells - basis + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t t = k; t < basis; ++t) pick[t] = pick[t - 1] + 1;
  }
  return best;
}

}  // namespace oracle
