// Serial reference vs OpenMP backend for the per-node kernels.

#include <benchmark/benchmark.h>

#include "localgsp/distribution.hpp"
#include "localgsp/filters.hpp"
#include "localgsp/generators.hpp"
#include "localgsp/spectral.hpp"
#include "localgsp/transport.hpp"

using namespace localgsp;

namespace {

Graph bench_graph(std::size_t n) {
  return random_bounded_degree_graph(n, 4, 17).with_signal(uniform_signal(n, -1.0, 1.0, 18));
}

Backend backend_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Backend::serial : Backend::openmp;
}

void BM_Pushforward(benchmark::State& state) {
  const Graph g = bench_graph(std::size_t(state.range(0)));
  const PushforwardOptions opts{backend_of(state), std::nullopt, ""};
  for (auto _ : state) benchmark::DoNotOptimize(pushforward(g, 2, opts));
}

void BM_LocalFilter(benchmark::State& state) {
  const Graph g = bench_graph(std::size_t(state.range(0)));
  const Filter f = make_filter({1.0, -0.4, 0.05, -0.01});
  for (auto _ : state) benchmark::DoNotOptimize(local_filter_outputs(f, g, backend_of(state)));
}

void BM_MomentLocal(benchmark::State& state) {
  const Graph g = bench_graph(std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(moment_local_average(g, 4, backend_of(state)));
}

void BM_CostMatrix(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  const auto mu = pushforward(bench_graph(n), 1);
  const auto nu = pushforward(random_bounded_degree_graph(n, 4, 19).with_signal(uniform_signal(n, -1, 1, 20)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(cost_matrix(mu, nu, 1.0, backend_of(state)));
}

}  // namespace

// second argument: 0 = serial, 1 = openmp
BENCHMARK(BM_Pushforward)->ArgsProduct({{200, 1000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LocalFilter)->ArgsProduct({{200, 1000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MomentLocal)->ArgsProduct({{200, 1000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CostMatrix)->ArgsProduct({{100, 300}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
