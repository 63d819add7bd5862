#include <benchmark/benchmark.h>

#include "intrel/family_algebras.hpp"
#include "intrel/hopf.hpp"

namespace {

using intrel::Relation;

Relation chain(int n) {
  Relation r(n);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) r.insert(a, b);
  return r;
}

void BM_ShuffleProductIPos(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Relation r = chain(m);
  const Relation s = chain(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(intrel::shuffle_product(r, s, intrel::Carrier::IPos));
  }
}
BENCHMARK(BM_ShuffleProductIPos)->DenseRange(1, 3);

void BM_CutCoproduct(benchmark::State& state) {
  const Relation t(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(intrel::cut_coproduct(t));
}
BENCHMARK(BM_CutCoproduct)->DenseRange(2, 10, 4);

void BM_EProduct(benchmark::State& state) {
  const auto x = intrel::e_from(Relation(2));
  const auto y = intrel::e_from(Relation(2));
  for (auto _ : state) benchmark::DoNotOptimize(intrel::f_product(x, y));
}
BENCHMARK(BM_EProduct);

// The quotient table is memoized, so after the first iteration this times the lookup.
void BM_QuotientProductWOIP(benchmark::State& state) {
  const Relation r = chain(2);
  const Relation s = Relation::from_pairs(3, {{3, 2}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(intrel::quotient_basis_product(intrel::Family::WOIP, r, s));
  }
}
BENCHMARK(BM_QuotientProductWOIP);

void BM_SubalgebraProduct(benchmark::State& state) {
  const auto s = static_cast<intrel::Subalgebra>(state.range(0));
  const Relation t1 = chain(2);
  const Relation t2 = chain(3);
  for (auto _ : state) benchmark::DoNotOptimize(intrel::subalgebra_product(s, t1, t2));
  state.SetLabel(std::string(intrel::to_string(s)));
}
BENCHMARK(BM_SubalgebraProduct)
    ->Arg(static_cast<int>(intrel::Subalgebra::WOEPid))
    ->Arg(static_cast<int>(intrel::Subalgebra::TOEP))
    ->Arg(static_cast<int>(intrel::Subalgebra::TOIP))
    ->Arg(static_cast<int>(intrel::Subalgebra::TOFP))
    ->Unit(benchmark::kMicrosecond);

void BM_SubalgebraCoproduct(benchmark::State& state) {
  const auto s = static_cast<intrel::Subalgebra>(state.range(0));
  const Relation t = chain(4);
  for (auto _ : state) benchmark::DoNotOptimize(intrel::subalgebra_coproduct(s, t));
  state.SetLabel(std::string(intrel::to_string(s)));
}
BENCHMARK(BM_SubalgebraCoproduct)
    ->Arg(static_cast<int>(intrel::Subalgebra::TOEP))
    ->Arg(static_cast<int>(intrel::Subalgebra::TOIP))
    ->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
