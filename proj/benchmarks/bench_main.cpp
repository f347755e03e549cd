#include <benchmark/benchmark.h>

#include "quivernc/cluster.hpp"
#include "quivernc/latt.hpp"
#include "quivernc/ncmap.hpp"
#include "quivernc/stab.hpp"

namespace {

using namespace quivernc;

Quiver named(int which) {
  switch (which) {
    case 0: return parse_quiver("vertices 3\narrow 2 1\narrow 2 3");
    case 1: return parse_quiver("vertices 4\narrow 1 2\narrow 2 3\narrow 3 4");
    default: return parse_quiver("vertices 4\narrow 1 4\narrow 2 4\narrow 3 4");
  }
}

const char* label(int which) { return which == 0 ? "A3" : which == 1 ? "A4" : "D4"; }

void BM_PositiveRoots(benchmark::State& state) {
  const Quiver q = named(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(positive_roots(q));
  state.SetLabel(label(static_cast<int>(state.range(0))));
}

void BM_RepCategory(benchmark::State& state) {
  const Quiver q = named(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    RepCategory cat(q);
    benchmark::DoNotOptimize(cat.size());
  }
  state.SetLabel(label(static_cast<int>(state.range(0))));
}

void BM_OracleTables(benchmark::State& state) {
  const Quiver q = named(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    RepCategory cat(q);
    benchmark::DoNotOptimize(cat.oracle().quotient_summands.size());
  }
  state.SetLabel(label(static_cast<int>(state.range(0))));
}

void BM_TorsionClasses(benchmark::State& state) {
  const RepCategory cat(named(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_torsion_classes(cat));
  state.SetLabel(label(static_cast<int>(state.range(0))));
}

void BM_ClusterTilting(benchmark::State& state) {
  const RepCategory cat(named(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(cluster_tilting_objects(cat));
  state.SetLabel(label(static_cast<int>(state.range(0))));
}

void BM_NoncrossingPartitions(benchmark::State& state) {
  const Quiver q = named(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(noncrossing_partitions(q));
  state.SetLabel(label(static_cast<int>(state.range(0))));
}

void BM_NcOfTorsion(benchmark::State& state) {
  const RepCategory cat(named(static_cast<int>(state.range(0))));
  const auto tors = enumerate_torsion_classes(cat);
  for (auto _ : state)
    for (const auto& t : tors) benchmark::DoNotOptimize(nc_of_torsion(cat, t));
  state.SetLabel(label(static_cast<int>(state.range(0))));
}

void BM_CambrianAnalysis(benchmark::State& state) {
  const RepCategory cat(named(static_cast<int>(state.range(0))));
  const auto p = cambrian_poset(cat);
  for (auto _ : state) benchmark::DoNotOptimize(lattice_analyze(p));
  state.SetLabel(label(static_cast<int>(state.range(0))));
}

void BM_StabilitySuite(benchmark::State& state) {
  const RepCategory cat(named(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(stability_suite(cat, 1, 3));
  state.SetLabel(label(static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_PositiveRoots)->DenseRange(0, 2);
BENCHMARK(BM_RepCategory)->DenseRange(0, 2);
BENCHMARK(BM_OracleTables)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TorsionClasses)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClusterTilting)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NoncrossingPartitions)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NcOfTorsion)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CambrianAnalysis)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StabilitySuite)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
