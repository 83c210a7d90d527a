#include <benchmark/benchmark.h>

#include "clm/disc/counts.hpp"
#include "clm/disc/moments.hpp"

namespace {

void BM_Q8Count(benchmark::State& state) {
  const clm::disc::FundamentalDiscriminant d(-3 * 5 * 7 * 11 * 13 * 17 * 19 * 23);
  for (auto _ : state) benchmark::DoNotOptimize(clm::disc::q8_count(d).count);
}
BENCHMARK(BM_Q8Count);

void BM_MomentSieve(benchmark::State& state) {
  clm::disc::SieveConfig cfg;
  cfg.group = state.range(1) == 0 ? clm::disc::CountedGroup::q8 : clm::disc::CountedGroup::d4;
  cfg.x_max = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(clm::disc::sieve_moments(cfg).rows.back().sum_counts);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MomentSieve)->Args({1'000'000, 0})->Args({1'000'000, 1})->Unit(benchmark::kMillisecond);

void BM_RestrictedSum(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(clm::disc::restricted_sum(-3, 13, clm::disc::Sign::negative, state.range(0)).num);
}
BENCHMARK(BM_RestrictedSum)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_CompositumTwists(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(clm::disc::count_compositum_twists(5, state.range(0)));
}
BENCHMARK(BM_CompositumTwists)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

}  // namespace
