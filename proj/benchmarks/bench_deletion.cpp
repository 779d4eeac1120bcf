#include <benchmark/benchmark.h>

#include "ordpath/ramsey.hpp"
#include "ordpath/turan.hpp"

using namespace ordpath;

static void BM_FindMonoZigzag(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int N = ramsey_upper_bound_ap(n);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    OrderedColoring host = OrderedColoring::random(N, seed++);
    FindResult r = find_mono_ap(host, n, {});
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_FindMonoZigzag)->Arg(6)->Arg(10)->Arg(20)->Arg(50);

static void BM_FindMonoZigzagClaimsChecked(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int N = ramsey_upper_bound_ap(n);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    OrderedColoring host = OrderedColoring::random(N, seed++);
    FindResult r = find_mono_ap(host, n, {.best_effort = false, .check_claims = true});
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_FindMonoZigzagClaimsChecked)->Arg(10)->Arg(20);

static void BM_FindInDense(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int N = 3 * n;
  OrderedGraph base = extremal_band(N, n);
  // One edge above the threshold, far from the band.
  base.add_edge(1, N);
  for (auto _ : state) {
    FindResult r = find_ap_in_dense(base, n, {});
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_FindInDense)->Arg(6)->Arg(12)->Arg(24);

BENCHMARK_MAIN();
