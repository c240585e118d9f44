#include <benchmark/benchmark.h>

#include "pathhom/pathhom.hpp"

using namespace pathhom;

static void BM_CubeHomology(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto p = PathComplex::from_digraph(make_cube(n));
  for (auto _ : state) benchmark::DoNotOptimize(homology(p, n + 1, {}, false, {true, false}));
}
BENCHMARK(BM_CubeHomology)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_SphereHomology(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto p = PathComplex::from_digraph(make_sphere(n, 5));
  for (auto _ : state) benchmark::DoNotOptimize(homology(p, n + 1, {}, false, {true, false}));
}
BENCHMARK(BM_SphereHomology)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_SimplexOmega(benchmark::State& state) {
  auto p = PathComplex::from_digraph(make_simplex(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(homology(p, 4, {}, false, {false, false}));
}
BENCHMARK(BM_SimplexOmega)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_MinimalHoles(benchmark::State& state) {
  auto p = PathComplex::from_digraph(make_sphere(2, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(minimized_generators(p, 2));
}
BENCHMARK(BM_MinimalHoles)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_ReduceFully(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v / 2, v);
  for (int v = 2; v < n; v += 3) edges.emplace_back(v, v - 1);
  DiGraph g = DiGraph::numbered(n, edges);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_fully(g));
}
BENCHMARK(BM_ReduceFully)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
