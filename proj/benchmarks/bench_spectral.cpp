#include <benchmark/benchmark.h>

#include "dipolariton/model.hpp"
#include "dipolariton/spectral.hpp"

namespace dp = dipolariton;

static void BM_Eig3Hermitian(benchmark::State& state) {
  const auto h = dp::build_hermitian(dp::reference_params(), 1, dp::units::kV_per_cm(-5.75));
  for (auto _ : state) {
    auto e = dp::eig3(h);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_Eig3Hermitian);

static void BM_Eig3Effective(benchmark::State& state) {
  const auto h = dp::build_effective(dp::reference_params(), 1, dp::units::kV_per_cm(-5.75));
  for (auto _ : state) {
    auto e = dp::eig3(h);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_Eig3Effective);

static void BM_TrackBranches(benchmark::State& state) {
  const auto p = dp::reference_params();
  const auto prev = dp::energy_ordered(dp::eig3(dp::build_effective(p, 1, dp::units::kV_per_cm(-5.8))));
  const auto cur = dp::eig3(dp::build_effective(p, 1, dp::units::kV_per_cm(-5.75)));
  for (auto _ : state) {
    auto t = dp::track_branches(prev, cur.pairs);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_TrackBranches);
