#include <benchmark/benchmark.h>

#include "plastic/bounds.hpp"
#include "plastic/constructions.hpp"
#include "plastic/random_spaces.hpp"
#include "plastic/search.hpp"
#include "plastic/separation.hpp"

using namespace plastic;

static void BM_SharpModulus(benchmark::State& state) {
  const SharpExample ex = sharp_case1(state.range(0), 1, 1);
  SearchOptions options;
  options.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_modulus(ex.space, ex.space, Rational(99, 100), MapClass::kBijections, options));
  }
}
BENCHMARK(BM_SharpModulus)->Args({5, 1})->Args({7, 1})->Args({7, 4})->Unit(benchmark::kMillisecond);

static void BM_AllMapsModulus(benchmark::State& state) {
  InstanceGenerator gen(7);
  const auto n = static_cast<std::size_t>(state.range(0));
  const FiniteMetricSpace x = gen.band_space(n);
  for (auto _ : state) benchmark::DoNotOptimize(exact_modulus(x, x, Rational(1, 3), MapClass::kAllMaps));
}
BENCHMARK(BM_AllMapsModulus)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_SeparatedSum(benchmark::State& state) {
  InstanceGenerator gen(11);
  const FiniteMetricSpace x = gen.band_space(static_cast<std::size_t>(state.range(0)));
  const Rational eps(4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(s_max(x, eps));
}
BENCHMARK(BM_SeparatedSum)->Arg(10)->Arg(16)->Arg(24)->Unit(benchmark::kMicrosecond);

static void BM_NetSum(benchmark::State& state) {
  InstanceGenerator gen(13);
  const FiniteMetricSpace x = gen.band_space(static_cast<std::size_t>(state.range(0)));
  const Rational eps(4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(alpha_min(x, eps));
}
BENCHMARK(BM_NetSum)->Arg(10)->Arg(16)->Arg(24)->Unit(benchmark::kMicrosecond);

static void BM_Profile(benchmark::State& state) {
  InstanceGenerator gen(17);
  const FiniteMetricSpace x = gen.band_space(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(profile(x));
}
BENCHMARK(BM_Profile)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_OrbitFormula(benchmark::State& state) {
  for (auto _ : state) {
    for (std::int64_t n = 2; n <= 300; ++n) benchmark::DoNotOptimize(m_bruteforce(n));
  }
}
BENCHMARK(BM_OrbitFormula)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
