#include <benchmark/benchmark.h>

#include "twotone/floquet.hpp"
#include "twotone/lindblad.hpp"
#include "twotone/linalg.hpp"
#include "twotone/optimize.hpp"
#include "twotone/rwa.hpp"
#include "twotone/spectra.hpp"

using namespace twotone;

namespace {

SystemParams working_point(double omega = kInfiniteFrequency) {
  return params_from_cooperativity(1e4, 0.954174, 1.0, 1e-4, 10.0, omega);
}

void BM_SolveLyapunov4x4(benchmark::State& state) {
  const auto dd = rwa::build_rwa_drift_diffusion(working_point());
  for (auto _ : state) {
    benchmark::DoNotOptimize(linalg::solve_lyapunov(dd.drift, dd.diffusion));
  }
}
BENCHMARK(BM_SolveLyapunov4x4);

void BM_RwaSteadyState(benchmark::State& state) {
  const auto p = working_point();
  for (auto _ : state) {
    benchmark::DoNotOptimize(rwa::steady_state(p));
  }
}
BENCHMARK(BM_RwaSteadyState);

void BM_LindbladSteadyState(benchmark::State& state) {
  const auto p = working_point();
  for (auto _ : state) {
    benchmark::DoNotOptimize(lindblad::lindblad_steady_state(p));
  }
}
BENCHMARK(BM_LindbladSteadyState);

void BM_SpectrumAnalytic2001(benchmark::State& state) {
  const auto p = working_point();
  std::vector<double> grid(2001);
  for (int i = 0; i < 2001; ++i) grid[i] = -1.0 + 2.0 * i / 2000.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectra::output_spectrum_analytic(p, grid));
  }
}
BENCHMARK(BM_SpectrumAnalytic2001);

void BM_SpectrumNumeric2001(benchmark::State& state) {
  const auto p = working_point();
  std::vector<double> grid(2001);
  for (int i = 0; i < 2001; ++i) grid[i] = -1.0 + 2.0 * i / 2000.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectra::output_spectrum_numeric(p, grid));
  }
}
BENCHMARK(BM_SpectrumNumeric2001);

void BM_IntegratedWeight(benchmark::State& state) {
  const auto p = working_point();
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectra::integrated_weight(p));
  }
}
BENCHMARK(BM_IntegratedWeight);

void BM_FloquetPeriodicSteadyState(benchmark::State& state) {
  auto p = params_from_cooperativity(1e4, 0.9, 10.0, 1e-4, 10.0, 50.0);
  floquet::FloquetOptions opts;
  opts.tolerance = 1e-7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(floquet::periodic_steady_state(p, opts));
  }
}
BENCHMARK(BM_FloquetPeriodicSteadyState);

void BM_OptimizeRatioRwa(benchmark::State& state) {
  auto backend = [](double q) {
    return rwa::steady_state(params_from_cooperativity(1e4, q, 1.0, 1e-4, 10.0))
        .var_x1;
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        optimize::optimize_ratio(backend, 1e-3, 1.0 - 1e-7, 1e-6));
  }
}
BENCHMARK(BM_OptimizeRatioRwa);

}  // namespace

BENCHMARK_MAIN();
