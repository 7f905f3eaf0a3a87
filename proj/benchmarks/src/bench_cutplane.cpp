// Microbenchmarks for the hot paths: localization, sampling, volume
// estimation, and center computation. Inputs are fixed-seed so numbers are
// comparable across runs.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "cutplane/centers.hpp"
#include "cutplane/compression.hpp"
#include "cutplane/geometry.hpp"
#include "cutplane/perceptron.hpp"
#include "cutplane/rng.hpp"
#include "cutplane/synthetic.hpp"
#include "cutplane/version_space.hpp"

namespace {

using namespace cutplane;

const SyntheticData& planar_data() {
  static const SyntheticData data = [] {
    SyntheticConfig config;
    config.n_points = 1000;
    config.side = 20.0;
    config.margin_gamma = 0.1;
    config.seed = 7;
    return generate_synthetic(config);
  }();
  return data;
}

SphericalPolytope bench_polytope(std::size_t dim) {
  return random_polytope(dim, dim + 2, 11 + dim);
}

void BM_Localize(benchmark::State& state) {
  auto kind = static_cast<StrategyKind>(state.range(0));
  OracleStrategy strategy{kind, 99};
  const Dataset& dataset = planar_data().dataset;
  std::uint64_t planes = 0;
  for (auto _ : state) {
    LocalizationTrace trace = localize(dataset, strategy);
    planes += trace.plane_indices.size();
    benchmark::DoNotOptimize(trace.w_final.data());
  }
  state.SetLabel(strategy_name(kind));
  state.counters["planes"] = benchmark::Counter(
      static_cast<double>(planes), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_Localize)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

void BM_Replay(benchmark::State& state) {
  const Dataset& dataset = planar_data().dataset;
  OracleStrategy strategy{StrategyKind::LargestError, 99};
  CompressionScheme scheme =
      extract_scheme(localize(dataset, strategy), strategy);
  for (auto _ : state) {
    Vec w = replay(dataset, scheme);
    benchmark::DoNotOptimize(w.data());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Replay)->Unit(benchmark::kMicrosecond);

void BM_HitAndRun(benchmark::State& state) {
  auto dim = static_cast<std::size_t>(state.range(0));
  SphericalPolytope polytope = bench_polytope(dim);
  SamplerConfig config;
  config.seed = 5;
  const std::size_t n = 1000;
  for (auto _ : state) {
    auto samples = hit_and_run(polytope, n, config);
    benchmark::DoNotOptimize(samples.data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(n));
}
BENCHMARK(BM_HitAndRun)->Arg(2)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_EstimateVolume(benchmark::State& state) {
  auto dim = static_cast<std::size_t>(state.range(0));
  SphericalPolytope polytope = bench_polytope(dim);
  const std::size_t n = 100000;
  for (auto _ : state) {
    VolumeEstimate estimate = estimate_volume(polytope, n, 5);
    benchmark::DoNotOptimize(estimate.value);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(n));
}
BENCHMARK(BM_EstimateVolume)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ChebyshevCenter(benchmark::State& state) {
  auto dim = static_cast<std::size_t>(state.range(0));
  SphericalPolytope polytope = bench_polytope(dim);
  for (auto _ : state) {
    CenterEstimate center = chebyshev_center(polytope);
    benchmark::DoNotOptimize(center.inscribed_radius);
  }
}
BENCHMARK(BM_ChebyshevCenter)
    ->Arg(2)
    ->Arg(5)
    ->Arg(10)
    ->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
