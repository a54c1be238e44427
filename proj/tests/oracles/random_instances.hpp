#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "localgsp/filters.hpp"
#include "localgsp/generators.hpp"
#include "localgsp/graph.hpp"
#include "localgsp/rng.hpp"

namespace oracle {

// Random graph with n in [lo_n, hi_n], degree <= D in [1, max_D], signal in [-1, 1].
inline localgsp::Graph random_signal_graph(std::uint64_t seed, std::size_t lo_n, std::size_t hi_n,
                                           std::size_t max_D) {
  localgsp::Rng rng(seed);
  const std::size_t n = lo_n + localgsp::uniform_index(rng, hi_n - lo_n + 1);
  const std::size_t D = 1 + localgsp::uniform_index(rng, max_D);
  auto g = localgsp::random_bounded_degree_graph(n, D, rng());
  return g.with_signal(localgsp::uniform_signal(n, -1.0, 1.0, rng()));
}

inline localgsp::Filter random_filter(std::uint64_t seed, std::size_t K) {
  localgsp::Rng rng(seed);
  std::vector<double> taps(K + 1);
  for (double& t : taps) t = localgsp::uniform(rng, -1.0, 1.0);
  return localgsp::make_filter(taps);
}

inline std::vector<localgsp::NodeId> random_permutation(std::size_t n, localgsp::Rng& rng) {
  std::vector<localgsp::NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[localgsp::uniform_index(rng, i)]);
  }
  return perm;
}

}  // namespace oracle
