#include <benchmark/benchmark.h>

#include "clm/affine/affine_group.hpp"
#include "clm/group/automorphisms.hpp"
#include "clm/group/gi.hpp"
#include "clm/group/standard_groups.hpp"

namespace {

void BM_AutomorphismGroup(benchmark::State& state, const char* name) {
  const auto g = clm::group::group_from_name(name);
  for (auto _ : state) benchmark::DoNotOptimize(clm::group::automorphism_group(g).order);
}
BENCHMARK_CAPTURE(BM_AutomorphismGroup, a5, "a5");
BENCHMARK_CAPTURE(BM_AutomorphismGroup, s4, "s4");
BENCHMARK_CAPTURE(BM_AutomorphismGroup, c2xc2xc2xc2, "c2xc2xc2xc2");

void BM_GiCount(benchmark::State& state, const char* name) {
  const auto g = clm::group::group_from_name(name);
  for (auto _ : state) benchmark::DoNotOptimize(clm::group::gi_extension_count(g).gi_extension_count);
}
BENCHMARK_CAPTURE(BM_GiCount, q8, "q8");
BENCHMARK_CAPTURE(BM_GiCount, a5, "a5");
BENCHMARK_CAPTURE(BM_GiCount, s3xs3, "s3xs3");

void BM_GiCountAffine(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const auto n = static_cast<unsigned>(state.range(1));
  const auto d = static_cast<std::uint64_t>(state.range(2));
  const auto g = clm::affine::build_affine_group(clm::affine::make_affine_spec(p, n, d));
  for (auto _ : state) benchmark::DoNotOptimize(clm::group::gi_extension_count(g.realization.group).gi_extension_count);
}
BENCHMARK(BM_GiCountAffine)->Args({2, 4, 5})->Args({2, 6, 3})->Args({3, 4, 2})->Unit(benchmark::kMillisecond);

void BM_InvolutiveAutomorphisms(benchmark::State& state) {
  const auto g = clm::group::group_from_name("c2xc2xc2xc2");
  for (auto _ : state) benchmark::DoNotOptimize(clm::group::involutive_automorphisms(g).size());
}
BENCHMARK(BM_InvolutiveAutomorphisms)->Unit(benchmark::kMillisecond);

}  // namespace
