#include <benchmark/benchmark.h>

#include <cstdint>

#include "tripleline/diagram/census.hpp"
#include "tripleline/diagram/enumerate.hpp"
#include "tripleline/series/assemble.hpp"
#include "tripleline/series/tri_series.hpp"

namespace {

using namespace tripleline;

void BM_EnumerateOnly(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t n = 0;
    diagram::enumerate_matchings(k, diagram::MatchMode::AbOnly, [&](const diagram::Pairing&) { ++n; });
    benchmark::DoNotOptimize(n);
    state.counters["pairings"] = static_cast<double>(n);
  }
}
BENCHMARK(BM_EnumerateOnly)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  diagram::CensusOptions options;
  options.threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    const auto census = diagram::run_census(static_cast<int>(state.range(0)), options);
    benchmark::DoNotOptimize(census.pairings);
  }
}
BENCHMARK(BM_Census)->Args({3, 1})->Args({4, 1})->Args({5, 1})->Args({5, 4})->Unit(benchmark::kMillisecond);

void BM_LogSeries(benchmark::State& state) {
  const auto z = series::assemble_Z(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(series::formal_log(z));
}
BENCHMARK(BM_LogSeries)->DenseRange(2, 4);

void BM_AssembleSymmetric(benchmark::State& state) {
  series::AssembleOptions options;
  options.action = series::SeriesAction::Symmetric;
  for (auto _ : state) benchmark::DoNotOptimize(series::assemble_Z(static_cast<int>(state.range(0)), options));
}
BENCHMARK(BM_AssembleSymmetric)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
