#include <benchmark/benchmark.h>

#include "clm/analytic/euler.hpp"
#include "clm/analytic/lvalues.hpp"
#include "clm/analytic/residues.hpp"

namespace {

void BM_LValueCharacterSum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(clm::analytic::l_value_at_1(state.range(0), 1e-8).value);
}
BENCHMARK(BM_LValueCharacterSum)->Arg(-4)->Arg(-2379)->Arg(100'001)->Unit(benchmark::kMicrosecond);

void BM_LValueSmoothed(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(clm::analytic::l_value_smoothed(state.range(0)).value);
}
BENCHMARK(BM_LValueSmoothed)->Arg(-2379)->Arg(100'001)->Arg(-9'999'991)->Unit(benchmark::kMicrosecond);

void BM_LValueTable(benchmark::State& state) {
  const clm::analytic::SmoothedLEvaluator eval(1'000'000);
  for (auto _ : state) benchmark::DoNotOptimize(eval(999'997));
}
BENCHMARK(BM_LValueTable)->Unit(benchmark::kMicrosecond);

void BM_EulerProduct(benchmark::State& state) {
  const clm::analytic::RealCharacter chi(-3);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        clm::analytic::truncated_euler_product(2, chi, 1.5, static_cast<std::uint64_t>(state.range(0))).value);
}
BENCHMARK(BM_EulerProduct)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_ResidueQ8(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(clm::analytic::residue_q8(-3, 13, clm::disc::Sign::negative).value);
}
BENCHMARK(BM_ResidueQ8)->Unit(benchmark::kMillisecond);

}  // namespace
