#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "localgsp/graph.hpp"

namespace localgsp {

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);  // center 0

// Random graph with maximum degree <= max_degree: `attempts` uniform node
// pairs, each added when it is new and both endpoints have spare degree.
// attempts = 0 means n * max_degree.
Graph random_bounded_degree_graph(std::size_t n, std::size_t max_degree, std::uint64_t seed,
                                  std::size_t attempts = 0);

// Same graph with i.i.d. uniform edge weights in [lo, hi].
Graph with_random_weights(const Graph& g, double lo, double hi, std::uint64_t seed);

std::vector<double> uniform_signal(std::size_t n, double lo, double hi, std::uint64_t seed);
// x_v = sin(2 pi v / n).
std::vector<double> sine_signal(std::size_t n);

}  // namespace localgsp
