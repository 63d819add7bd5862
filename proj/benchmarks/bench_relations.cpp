#include <benchmark/benchmark.h>

#include "intrel/hopf.hpp"
#include "intrel/relation.hpp"

namespace {

void BM_CountIndecomposables(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(intrel::count_indecomposables(n));
}
BENCHMARK(BM_CountIndecomposables)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_InclusionExclusion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(intrel::inclusion_exclusion_in(n));
}
BENCHMARK(BM_InclusionExclusion)->DenseRange(3, 8);

// Visits every relation of the shuffle of two chains without storing them.
void BM_ShuffleVisit(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  intrel::Relation r(m);
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) r.insert(a, b);
  intrel::Relation s(n);
  for (auto _ : state) {
    std::size_t count = 0;
    intrel::for_each_shifted_shuffle(r, s, [&](const intrel::Relation&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_ShuffleVisit)->Args({1, 3})->Args({2, 2})->Args({2, 3})->Args({3, 3});

void BM_TotalCuts(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  intrel::Relation t(n);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) t.insert(a, b);
  for (auto _ : state) benchmark::DoNotOptimize(intrel::total_cuts(t));
}
BENCHMARK(BM_TotalCuts)->DenseRange(4, 12, 4);

}  // namespace

BENCHMARK_MAIN();
