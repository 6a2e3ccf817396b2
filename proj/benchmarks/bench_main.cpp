#include <benchmark/benchmark.h>

#include "grasscode/cliques.hpp"
#include "grasscode/code_graph.hpp"

using namespace grasscode;

namespace {

void BM_Enumerate(benchmark::State& state) {
  const auto params = GrassmannianParams::make(static_cast<int>(state.range(0)), 3, 3);
  for (auto _ : state) {
    std::uint64_t count = 0;
    for_each_subspace(params, [&](const Subspace& x) { count += x.dim(); });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Enumerate)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Adjacency(benchmark::State& state) {
  const auto all = enumerate_grassmannian(GrassmannianParams::make(6, 3, 2));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_adjacent(all[i % all.size()], all[(i * 7 + 3) % all.size()]));
    ++i;
  }
}
BENCHMARK(BM_Adjacency);

void BM_BuildGraph(benchmark::State& state) {
  const auto params = GrassmannianParams::make(static_cast<int>(state.range(0)), 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(params, Variant::nondeg).edge_count());
}
BENCHMARK(BM_BuildGraph)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_DistanceScan(benchmark::State& state) {
  const Graph g = build_graph(GrassmannianParams::make(static_cast<int>(state.range(0)), 2, 2), Variant::nondeg);
  DistanceOptions opt;
  opt.stop_at_first_witness = false;
  for (auto _ : state) benchmark::DoNotOptimize(distance_coincidence(g, opt).pairs_checked);
}
BENCHMARK(BM_DistanceScan)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  const Graph g = build_graph(GrassmannianParams::make(5, 2, 2), Variant::nondeg);
  for (auto _ : state) benchmark::DoNotOptimize(maximal_clique_census(g).maximal_cliques);
}
BENCHMARK(BM_Census)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
