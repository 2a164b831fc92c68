#include <benchmark/benchmark.h>

#include "crystalq/plane_partition.hpp"
#include "crystalq/qseries.hpp"
#include "crystalq/ronkin.hpp"
#include "crystalq/vertex.hpp"

using crystalq::QSeries;
using crystalq::Rat;
using crystalq::TorusWeights;

static void BM_EnumeratePlanePartitions(benchmark::State& state) {
  long n = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(crystalq::enumerate_plane_partitions(n));
}
BENCHMARK(BM_EnumeratePlanePartitions)->Arg(8)->Arg(10)->Arg(12);

static void BM_McMahon(benchmark::State& state) {
  long trunc = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(crystalq::mcmahon(trunc));
}
BENCHMARK(BM_McMahon)->Arg(50)->Arg(100)->Arg(200);

static void BM_SeriesMultiply(benchmark::State& state) {
  long trunc = state.range(0);
  QSeries m = crystalq::mcmahon(trunc);
  QSeries inv = m.inverse();
  for (auto _ : state) benchmark::DoNotOptimize(m * inv);
}
BENCHMARK(BM_SeriesMultiply)->Arg(50)->Arg(100)->Arg(200);

static void BM_SeriesPow(benchmark::State& state) {
  QSeries m = crystalq::mcmahon(state.range(0));
  Rat r(-63, 5);
  for (auto _ : state) benchmark::DoNotOptimize(m.at_neg_q().pow(r));
}
BENCHMARK(BM_SeriesPow)->Arg(50)->Arg(100);

static void BM_VertexSeries(benchmark::State& state) {
  TorusWeights t{1, 2, 5};
  long trunc = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(crystalq::vertex_series(t, trunc));
}
BENCHMARK(BM_VertexSeries)->Arg(4)->Arg(5)->Arg(6);

static void BM_Ronkin(benchmark::State& state) {
  long grid = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(crystalq::ronkin(1.0, -0.5, grid));
}
BENCHMARK(BM_Ronkin)->Arg(128)->Arg(512);

BENCHMARK_MAIN();
