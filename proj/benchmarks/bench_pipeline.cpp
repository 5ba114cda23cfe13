// Copyright 2026 The coexact Authors.
// SPDX-License-Identifier: Apache-2.0

// Timings for the stages of the exclusion pipeline. Uses the cutoff-6.5
// Census 0 fixture when present, else the cutoff-5 one.

#include <filesystem>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "coexact/analysis.hpp"

namespace {

using namespace coexact;

const ManifoldData& manifold() {
  static const ManifoldData m = [] {
    const std::string dir = COEXACT_FIXTURE_DIR;
    const std::string full = dir + "/census0.json";
    return load_manifold(std::filesystem::exists(full) ? full : dir + "/census0_r5.json");
  }();
  return m;
}

SincSplineFamily family() { return SincSplineFamily::for_cutoff(manifold().cutoff, 19); }

void BM_GeometricData(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(GeometricData::from(manifold()));
  state.SetLabel(std::to_string(GeometricData::from(manifold()).lengths.size()) + " classes");
}
BENCHMARK(BM_GeometricData)->Unit(benchmark::kMicrosecond);

void BM_SpectralSumCombined(benchmark::State& state) {
  const GeometricData data = GeometricData::from(manifold());
  std::vector<double> x(20);
  for (int k = 0; k < 20; ++k) x[k] = 1.0 / (1 + k);
  const CombinedTestFunction h(family(), x);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_sum(data, h));
}
BENCHMARK(BM_SpectralSumCombined)->Unit(benchmark::kMicrosecond);

void BM_SpectralSumChunked(benchmark::State& state) {
  const GeometricData data = GeometricData::from(manifold());
  const SplineTranslate h(family(), 30);
  const EvaluationOptions options{.chunk_size = static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(spectral_sum(data, h, options));
}
BENCHMARK(BM_SpectralSumChunked)->Arg(0)->Arg(256)->Arg(4096)->Unit(benchmark::kMicrosecond);

void BM_GramAssembly(benchmark::State& state) {
  const GeometricData data = GeometricData::from(manifold());
  const SincSplineFamily fam = family();
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(data, fam));
}
BENCHMARK(BM_GramAssembly)->Unit(benchmark::kMillisecond);

void BM_JValue(benchmark::State& state) {
  const ExclusionSolver solver(gram_matrix(manifold(), family()));
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solver.j_value(t));
    t = t > 4.0 ? 0.0 : t + 1e-3;
  }
}
BENCHMARK(BM_JValue);

void BM_Scan(benchmark::State& state) {
  const ExclusionSolver solver(gram_matrix(manifold(), family()));
  for (auto _ : state) benchmark::DoNotOptimize(scan(solver, 0.0, 4.0, 1e-3));
}
BENCHMARK(BM_Scan)->Unit(benchmark::kMillisecond);

void BM_ThresholdIntervals(benchmark::State& state) {
  const ExclusionSolver solver(gram_matrix(manifold(), family()));
  const ExclusionCurve curve = scan(solver, 0.0, 4.0, 1e-3);
  for (auto _ : state) benchmark::DoNotOptimize(threshold_intervals(solver, curve, 1.0, 1e-6));
}
BENCHMARK(BM_ThresholdIntervals)->Unit(benchmark::kMicrosecond);

void BM_BumpSquareConstruction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(BumpSquare(BumpSquare::kWindowScale));
}
BENCHMARK(BM_BumpSquareConstruction)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
