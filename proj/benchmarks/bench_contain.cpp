#include <benchmark/benchmark.h>

#include <random>

#include "ordpath/contain.hpp"

using namespace ordpath;

namespace {

OrderedGraph random_graph(int N, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution flip(p);
  OrderedGraph g(N);
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      if (flip(rng)) g.add_edge(i, j);
  return g;
}

}  // namespace

static void BM_ContainsZigzag(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  OrderedGraph g = random_graph(N, 0.3, 42);
  for (auto _ : state) {
    auto r = contains_path(g, {Family::ap, n});
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ContainsZigzag)->Args({50, 8})->Args({200, 8})->Args({200, 16})->Args({1000, 16});

static void BM_ContainsOneSided(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  OrderedGraph g = random_graph(N, 0.3, 7);
  for (auto _ : state) {
    auto r = contains_path(g, {Family::pgg, 12});
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ContainsOneSided)->Arg(100)->Arg(400);

static void BM_CountCopies(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  OrderedGraph g = random_graph(N, 0.5, 3);
  for (auto _ : state) {
    long long c = count_copies(g, {Family::ap, 4});
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CountCopies)->Arg(12)->Arg(16);

BENCHMARK_MAIN();
