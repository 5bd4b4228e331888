// Serial reference loops against their OpenMP versions, plus one full
// split step on each backend. Sizes span the default grid up to 2^18 points.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "lognls/evolution.hpp"
#include "lognls/gausson.hpp"
#include "lognls/kernels.hpp"

namespace {

using lognls::cplx;
namespace k = lognls::kernels;

std::vector<cplx> make_field(std::size_t n) {
  std::vector<cplx> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = -20.0 + 40.0 * static_cast<double>(j) / static_cast<double>(n);
    v[j] = std::polar(std::exp(-x * x / 4.0), 0.3 * x);
  }
  return v;
}

template <k::Backend B>
void BM_NonlinearPhase(benchmark::State& state) {
  auto psi = make_field(static_cast<std::size_t>(state.range(0)));
  const k::PhaseStep step{1e-3, 1.0, 0.5, 1e-30};
  for (auto _ : state) {
    k::nonlinear_phase(B, psi, {}, step);
    benchmark::DoNotOptimize(psi.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <k::Backend B>
void BM_LocalOperator(benchmark::State& state) {
  const auto psi = make_field(static_cast<std::size_t>(state.range(0)));
  std::vector<cplx> out(psi.size());
  for (auto _ : state) {
    k::apply_local_operator(B, psi, {}, 0.5, 1e-30, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <k::Backend B>
void BM_SumDensity(benchmark::State& state) {
  const auto psi = make_field(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(k::sum_density(B, psi));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <k::Backend B>
void BM_SplitStep(benchmark::State& state) {
  const lognls::Grid1D grid(-64.0, 64.0, static_cast<std::size_t>(state.range(0)));
  lognls::PhysicalParams params;
  lognls::EvolveConfig cfg;
  cfg.backend = B;
  auto gp = lognls::solve_omega_for_normalization(params, 1.0);
  auto psi = lognls::sample_gausson(gp, grid, 0.0).values;
  lognls::SplitStepIntegrator integrator(grid, params, cfg);
  for (auto _ : state) {
    integrator.step(psi);
    benchmark::DoNotOptimize(psi.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

constexpr auto serial = k::Backend::serial;
constexpr auto openmp = k::Backend::openmp;

BENCHMARK(BM_NonlinearPhase<serial>)->RangeMultiplier(8)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_NonlinearPhase<openmp>)->RangeMultiplier(8)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_LocalOperator<serial>)->RangeMultiplier(8)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_LocalOperator<openmp>)->RangeMultiplier(8)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_SumDensity<serial>)->RangeMultiplier(8)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_SumDensity<openmp>)->RangeMultiplier(8)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_SplitStep<serial>)->RangeMultiplier(8)->Range(1 << 10, 1 << 16);
BENCHMARK(BM_SplitStep<openmp>)->RangeMultiplier(8)->Range(1 << 10, 1 << 16);

}  // namespace

BENCHMARK_MAIN();
