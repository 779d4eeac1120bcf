#include <benchmark/benchmark.h>

#include "ordpath/search.hpp"
#include "ordpath/turan.hpp"

using namespace ordpath;

static void BM_RamseyExhaust(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  for (auto _ : state) {
    RamseySearchResult r = search_ramsey_witness(N, {Family::ap, n});
    benchmark::DoNotOptimize(r);
    if (r.outcome != SearchOutcome::exhausted) state.SkipWithError("expected exhaustion");
  }
}
BENCHMARK(BM_RamseyExhaust)->Args({4, 7})->Args({5, 9})->Args({6, 12})->Unit(benchmark::kMillisecond);

static void BM_RamseyWitness(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  for (auto _ : state) {
    RamseySearchResult r = search_ramsey_witness(N, {Family::ap, n});
    benchmark::DoNotOptimize(r);
    if (r.outcome != SearchOutcome::witness_found) state.SkipWithError("expected a witness");
  }
}
BENCHMARK(BM_RamseyWitness)->Args({5, 8})->Args({6, 11})->Unit(benchmark::kMillisecond);

static void BM_TuranExhaust(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  for (auto _ : state) {
    TuranSearchResult r = search_turan_max(N, {Family::ap, n});
    benchmark::DoNotOptimize(r);
    if (r.outcome != SearchOutcome::exhausted) state.SkipWithError("expected exhaustion");
  }
}
BENCHMARK(BM_TuranExhaust)->Args({4, 6})->Args({6, 8})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
