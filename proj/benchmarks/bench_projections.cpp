#include <benchmark/benchmark.h>

#include "intrel/families.hpp"
#include "intrel/projections.hpp"
#include "intrel/trees.hpp"

namespace {

void BM_ToipDeletionOnPermutations(benchmark::State& state) {
  std::vector<intrel::Relation> chains;
  for (const auto& sigma : intrel::all_permutations(static_cast<int>(state.range(0)))) {
    chains.push_back(intrel::from_permutation(sigma));
  }
  for (auto _ : state) {
    for (const auto& c : chains) benchmark::DoNotOptimize(intrel::toip_deletion(c));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(chains.size()));
}
BENCHMARK(BM_ToipDeletionOnPermutations)->DenseRange(4, 7);

void BM_BstInsert(benchmark::State& state) {
  const auto perms = intrel::all_permutations(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& sigma : perms) benchmark::DoNotOptimize(intrel::bst_insert(sigma));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(perms.size()));
}
BENCHMARK(BM_BstInsert)->DenseRange(4, 7);

void BM_WoipDeletionOnPosets(benchmark::State& state) {
  const auto posets = intrel::enumerate_family(static_cast<int>(state.range(0)), intrel::Family::IPos,
                                               intrel::EnumerationMode::Filter);
  for (auto _ : state) {
    for (const auto& p : posets) benchmark::DoNotOptimize(intrel::woip_deletion(p));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(posets.size()));
}
BENCHMARK(BM_WoipDeletionOnPosets)->DenseRange(3, 5);

void BM_EnumerateFamily(benchmark::State& state) {
  const auto f = static_cast<intrel::Family>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(intrel::enumerate_family(5, f, intrel::EnumerationMode::Construct));
  }
  state.SetLabel(std::string(intrel::to_string(f)));
}
BENCHMARK(BM_EnumerateFamily)
    ->Arg(static_cast<int>(intrel::Family::WOIP))
    ->Arg(static_cast<int>(intrel::Family::TOIP))
    ->Arg(static_cast<int>(intrel::Family::TOFP))
    ->Unit(benchmark::kMillisecond);

// fiber_table caches its result; the first iteration pays for the sweep.
void BM_FiberTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(intrel::fiber_table(intrel::ProjectionMap::TOIPd, intrel::Family::WOIP, n));
  }
}
BENCHMARK(BM_FiberTable)->DenseRange(3, 5)->Iterations(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
