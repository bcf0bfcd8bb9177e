#include <benchmark/benchmark.h>

#include "dipolariton/config.hpp"
#include "dipolariton/csv.hpp"
#include "dipolariton/sweep.hpp"

namespace dp = dipolariton;

static void BM_DefaultSweep(benchmark::State& state) {
  const dp::Config c = dp::default_config();
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto rows = dp::run_sweep(c.params, c.sweep, c.kind, c.thresholds, workers);
    benchmark::DoNotOptimize(rows);
  }
  state.SetItemsProcessed(state.iterations() * c.sweep.steps);
}
BENCHMARK(BM_DefaultSweep)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_CsvSerialization(benchmark::State& state) {
  const dp::Config c = dp::default_config();
  const auto rows = dp::run_sweep(c.params, c.sweep, c.kind, c.thresholds);
  const dp::CsvMetadata meta{dp::echo_config(c), c.sweep.labeling, c.kind};
  for (auto _ : state) {
    auto text = dp::to_csv(rows, meta);
    benchmark::DoNotOptimize(text);
  }
}
BENCHMARK(BM_CsvSerialization)->Unit(benchmark::kMillisecond);

static void BM_MinGap(benchmark::State& state) {
  auto p = dp::reference_params();
  p.coupling = dp::Energy(0.0);
  const dp::Field center = dp::resonance_field(p);
  for (auto _ : state) {
    auto g = dp::min_gap(p, 1, dp::BranchPair::LowerMiddle, center - dp::Field(5.0), center + dp::Field(5.0));
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_MinGap)->Unit(benchmark::kMicrosecond);
