// Serial reference vs OpenMP generator tables on the larger builtins.
#include <benchmark/benchmark.h>

#include "ribbon/catalog.hpp"
#include "ribbon/torsor.hpp"

namespace {

const char* kGraphs[] = {"K4", "theta", "B6", "K5"};

void BM_TablesSerial(benchmark::State& state) {
  const auto g = ribbon::builtin_graph(kGraphs[state.range(0)]);
  const ribbon::TreeIndex trees(g);
  for (auto _ : state) benchmark::DoNotOptimize(ribbon::generator_tables_serial(g, trees));
  state.SetLabel(kGraphs[state.range(0)]);
}

void BM_TablesParallel(benchmark::State& state) {
  const auto g = ribbon::builtin_graph(kGraphs[state.range(0)]);
  const ribbon::TreeIndex trees(g);
  for (auto _ : state) benchmark::DoNotOptimize(ribbon::generator_tables_parallel(g, trees));
  state.SetLabel(kGraphs[state.range(0)]);
}

}  // namespace

BENCHMARK(BM_TablesSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TablesParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
