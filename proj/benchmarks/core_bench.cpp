#include <benchmark/benchmark.h>

#include "binomrep/census.hpp"
#include "binomrep/curve.hpp"
#include "binomrep/search.hpp"

using namespace binomrep;

static void BM_Binomial(benchmark::State& state) {
  const Nat n = static_cast<std::uint64_t>(state.range(0));
  const Nat k = n / Nat(3);
  for (auto _ : state) benchmark::DoNotOptimize(binomial(n, k));
}
BENCHMARK(BM_Binomial)->RangeMultiplier(10)->Range(100, 100'000);

static void BM_SearchSingmaster(benchmark::State& state) {
  const auto y_max = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search(ShiftPair(1, 1), y_max));
}
BENCHMARK(BM_SearchSingmaster)->Arg(2000)->Arg(20'000)->Unit(benchmark::kMillisecond);

static void BM_SearchWorkers(benchmark::State& state) {
  const SearchOptions opts{.workers = static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(search(ShiftPair(2, 3), 20'000, opts));
}
BENCHMARK(BM_SearchWorkers)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_BruteSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(brute_search(ShiftPair(2, 1), 600));
}
BENCHMARK(BM_BruteSearch)->Unit(benchmark::kMillisecond);

static void BM_Multiplicity(benchmark::State& state) {
  const Nat t = binomial(200, 60);
  for (auto _ : state) benchmark::DoNotOptimize(multiplicity(t));
}
BENCHMARK(BM_Multiplicity);

static void BM_ScanHighMultiplicity(benchmark::State& state) {
  const Nat t_max = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan_high_multiplicity(t_max, 6));
}
BENCHMARK(BM_ScanHighMultiplicity)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

static void BM_Certify(benchmark::State& state) {
  const auto a = static_cast<std::uint64_t>(state.range(0));
  const auto b = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(certify(ShiftPair(a, b)));
}
BENCHMARK(BM_Certify)->Args({2, 2})->Args({3, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

static void BM_Resultant(benchmark::State& state) {
  const BiPoly f = build_curve(ShiftPair(3, 3));
  const BiPoly fx = partial(f, Var::X);
  for (auto _ : state) benchmark::DoNotOptimize(resultant(f, fx, Var::Y));
}
BENCHMARK(BM_Resultant)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
