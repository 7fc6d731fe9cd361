#include <benchmark/benchmark.h>

#include "catkit/functor_search.hpp"
#include "catkit/lifting.hpp"
#include "catkit/presentation.hpp"

using namespace catkit;

static void BM_CountFunctors(benchmark::State& state) {
  auto S = Poset::chain(static_cast<int>(state.range(0))).to_category();
  auto T = Poset::divisors(12).to_category();
  for (auto _ : state) benchmark::DoNotOptimize(count_functors(S, T));
}
BENCHMARK(BM_CountFunctors)->DenseRange(1, 4);

static void BM_CofibrationAxioms(benchmark::State& state) {
  auto P = lattice_cofcat(Poset::divisors(static_cast<int>(state.range(0))), WeMode::Identities);
  for (auto _ : state) benchmark::DoNotOptimize(check_cofibration_axioms(P));
}
BENCHMARK(BM_CofibrationAxioms)->Arg(6)->Arg(12)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_QuasicategoryNerve(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  auto N = nerve(Poset::chain(m).to_category(), 3);
  for (auto _ : state) {
    Budget b;
    benchmark::DoNotOptimize(is_quasicategory_upto(N, 3, b));
  }
}
BENCHMARK(BM_QuasicategoryNerve)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_MapsBoundaryIntoNerve(benchmark::State& state) {
  auto B = standard_cells(CellKind::Boundary, 2, 2);
  auto N = nerve(Poset::divisors(6).to_category(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(count_maps(B, N));
}
BENCHMARK(BM_MapsBoundaryIntoNerve);
