#include <benchmark/benchmark.h>

#include "qphase/qphase.hpp"

namespace {

void BM_Hermite(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qphase::hermite(n, 3.7));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Hermite)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);

void BM_DisplacedTable(benchmark::State& state) {
  const qphase::DisplacedNumberState st{3, 10.1};
  for (auto _ : state) benchmark::DoNotOptimize(qphase::pmf_table(st, static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_DisplacedTable)->Arg(300)->Arg(2000);

void BM_TpcsTable(benchmark::State& state) {
  const qphase::TwoPhotonCoherentState st{5.1, 3.};
  for (auto _ : state) benchmark::DoNotOptimize(qphase::pmf_table(st, static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_TpcsTable)->Arg(300)->Arg(2000);

void BM_DerivativeOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qphase::displaced_amplitude_via_derivative(150, {10, 10.1}));
}
BENCHMARK(BM_DerivativeOracle);

void BM_QuadratureOracle(benchmark::State& state) {
  const qphase::State st = qphase::DisplacedNumberState{2, 1.5};
  const auto g = qphase::default_oracle_grid(30, st);
  for (auto _ : state) benchmark::DoNotOptimize(qphase::overlap_amplitudes_oracle(30, st, g));
}
BENCHMARK(BM_QuadratureOracle)->Unit(benchmark::kMillisecond);

void BM_QGrid(benchmark::State& state) {
  const qphase::QGridSelector sel = qphase::ProductSelector{100, {3, 10.1}};
  const qphase::GridSpec g{-2., 14., -6., 6., 400, 300};
  for (auto _ : state) benchmark::DoNotOptimize(qphase::q_grid(sel, g));
}
BENCHMARK(BM_QGrid)->Unit(benchmark::kMillisecond);

void BM_CompareDisplaced(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qphase::compare_displaced({3, 10.1}, 200));
}
BENCHMARK(BM_CompareDisplaced);

}  // namespace

BENCHMARK_MAIN();
