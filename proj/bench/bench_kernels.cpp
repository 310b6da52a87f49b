// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "sstar/generator.hpp"
#include "sstar/membership.hpp"

using namespace sstar;

namespace {

const ClassParams kParams = make_params(0.3, 0.9);

void BM_membership_parallel(benchmark::State& state) {
  SampleGrid grid = default_grid();
  grid.angles_per_radius = static_cast<std::size_t>(state.range(0));
  const AnalyticEvaluator f = extremal_evaluator(kParams);
  for (auto _ : state) benchmark::DoNotOptimize(check_membership(f, kParams, grid));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.total_samples()));
}

void BM_membership_serial(benchmark::State& state) {
  SampleGrid grid = default_grid();
  grid.angles_per_radius = static_cast<std::size_t>(state.range(0));
  const AnalyticEvaluator f = extremal_evaluator(kParams);
  for (auto _ : state) benchmark::DoNotOptimize(check_membership_serial(f, kParams, grid));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.total_samples()));
}

void BM_re_extrema_parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(g_real_part_extrema(kParams, 0.3, n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_re_extrema_serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(g_real_part_extrema_serial(kParams, 0.3, n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_membership_parallel)->Arg(90)->Arg(720)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_membership_serial)->Arg(90)->Arg(720)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_re_extrema_parallel)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_re_extrema_serial)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
