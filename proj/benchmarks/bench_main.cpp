#include <benchmark/benchmark.h>

#include "equidist/stats.hpp"

using namespace equidist;

static void BM_Sieve(benchmark::State& state) {
  const auto limit = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(FactorTable(limit).spf(limit));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sieve)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_RootCache(benchmark::State& state) {
  const auto limit = static_cast<u64>(state.range(0));
  const FactorTable table(limit);
  const IntPolynomial f{-1, -1, 0, 1};
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(RootCache(f, table, kDefaultBruteForceThreshold, threads).entries());
}
BENCHMARK(BM_RootCache)->Args({100000, 1})->Args({1000000, 1})->Args({1000000, 4})->Unit(benchmark::kMillisecond);

// Full scan with the default report options; second argument is the thread count.
static void BM_Scan(benchmark::State& state) {
  const auto x = static_cast<u64>(state.range(0));
  ScanOptions opt;
  opt.frequencies = {{1, 0}, {0, 1}, {1, 1}, {2, -3}};
  opt.rects = {{Rational(0, 1), Rational(1, 2), Rational(0, 1), Rational(1, 2)}};
  opt.grid_resolution = 256;
  opt.threads = static_cast<unsigned>(state.range(1));
  const SequenceSpec spec{{1, 0, 1}, {-2, 0, 1}, x};
  for (auto _ : state) benchmark::DoNotOptimize(scan_sequence(spec, opt));
}
BENCHMARK(BM_Scan)->Args({100000, 1})->Args({100000, 4})->Args({1000000, 1})->Args({1000000, 4})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
