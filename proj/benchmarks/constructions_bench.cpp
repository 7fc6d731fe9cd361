#include <benchmark/benchmark.h>

#include "catkit/dbar.hpp"
#include "catkit/direct.hpp"
#include "catkit/frames.hpp"
#include "catkit/presentation.hpp"

using namespace catkit;

static void BM_DOfChain(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int deg = static_cast<int>(state.range(1));
  auto J = minimal_marking(Poset::chain(m).to_category());
  for (auto _ : state) benchmark::DoNotOptimize(d_of_category(J, deg));
}
BENCHMARK(BM_DOfChain)->Args({1, 2})->Args({2, 2})->Args({2, 3})->Args({3, 3});

static void BM_DOfBoundary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto K = standard_cells(CellKind::Boundary, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(d_of_sset(K, n));
}
BENCHMARK(BM_DOfBoundary)->DenseRange(1, 3);

static void BM_SdDivisors(benchmark::State& state) {
  auto P = Poset::divisors(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sd_poset(P));
}
BENCHMARK(BM_SdDivisors)->Arg(6)->Arg(12)->Arg(30);

static void BM_Dbar(benchmark::State& state) {
  auto J = minimal_marking(Poset::chain(static_cast<int>(state.range(0))).to_category());
  for (auto _ : state) benchmark::DoNotOptimize(dbar(J, 1, 1));
}
BENCHMARK(BM_Dbar)->DenseRange(0, 2);

static void BM_NfLattice(benchmark::State& state) {
  auto L = lattice_cofcat(Poset::divisors(6), WeMode::Identities);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nf_truncated(L, m, 2));
}
BENCHMARK(BM_NfLattice)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_Classification(benchmark::State& state) {
  auto C = minimal_marking(Poset::divisors(6).to_category());
  for (auto _ : state) benchmark::DoNotOptimize(classification_diagram(C, 2, 2));
}
BENCHMARK(BM_Classification)->Unit(benchmark::kMillisecond);
