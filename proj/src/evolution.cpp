#include "lognls/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>

#include "lognls/errors.hpp"
#include "lognls/spectral.hpp"

namespace lognls {

void validate(const EvolveConfig& cfg) {
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) throw ConfigError("evolve: dt must be positive");
  if (!(cfg.log_clamp > 0.0) || cfg.log_clamp > 1e-6) {
    throw ConfigError("evolve: log_clamp must lie in (0, 1e-6]");
  }
  if (!(cfg.cn_tol > 0.0)) throw ConfigError("evolve: cn_tol must be positive");
  if (cfg.cn_max_iter == 0) throw ConfigError("evolve: cn_max_iter must be at least 1");
}

// ---------------------------------------------------------------------------

SplitStepIntegrator::SplitStepIntegrator(const Grid1D& grid, const PhysicalParams& params,
                                         const EvolveConfig& cfg)
    : params_(params), cfg_(cfg), plan_(grid.size()), propagator_(grid.size()),
      work_(grid.size()) {
  const double inv_n = 1.0 / static_cast<double>(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double k = grid.wavenumber(j);
    propagator_[j] = std::polar(inv_n, -params.hbar * k * k * cfg.dt / (2.0 * params.mass));
  }
}

void SplitStepIntegrator::local_half_step(std::span<cplx> psi) {
  const double peak = kernels::max_density(cfg_.backend, psi);
  kernels::PhaseStep ps;
  ps.tau = 0.5 * cfg_.dt;
  ps.hbar = params_.hbar;
  ps.b = params_.b;
  ps.density_floor = cfg_.log_clamp * peak;
  kernels::nonlinear_phase(cfg_.backend, psi, params_.potential, ps);
}

void SplitStepIntegrator::step(std::span<cplx> psi) {
  local_half_step(psi);
  plan_.forward(psi, work_);
  kernels::multiply(cfg_.backend, work_, propagator_);
  plan_.backward(work_, psi);
  local_half_step(psi);
}

// ---------------------------------------------------------------------------

CrankNicolsonIntegrator::CrankNicolsonIntegrator(const Grid1D& grid, const PhysicalParams& params,
                                                 const EvolveConfig& cfg)
    : params_(params), cfg_(cfg), plan_(grid.size()), propagate_(grid.size()),
      couple_(grid.size()), current_hat_(grid.size()), next_(grid.size()), mid_(grid.size()),
      source_(grid.size()) {
  const double inv_n = 1.0 / static_cast<double>(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double k = grid.wavenumber(j);
    const double theta = params.hbar * k * k * cfg.dt / (4.0 * params.mass);
    const cplx denom(1.0, theta);
    propagate_[j] = inv_n * cplx(1.0, -theta) / denom;
    couple_[j] = inv_n * cplx(0.0, -cfg.dt / params.hbar) / denom;
  }
}

std::size_t CrankNicolsonIntegrator::step(std::span<cplx> psi) {
  const auto be = cfg_.backend;
  plan_.forward(psi, current_hat_);
  std::copy(psi.begin(), psi.end(), next_.begin());
  for (std::size_t iter = 1; iter <= cfg_.cn_max_iter; ++iter) {
    kernels::midpoint(be, psi, next_, mid_);
    const double floor = cfg_.log_clamp * kernels::max_density(be, mid_);
    kernels::apply_local_operator(be, mid_, params_.potential, params_.b, floor, source_);
    plan_.forward(source_, source_);
    kernels::cayley_update(be, current_hat_, source_, propagate_, couple_, mid_);
    plan_.backward(mid_, mid_);
    const double change = kernels::max_abs_diff(be, mid_, next_);
    next_.swap(mid_);
    if (change <= cfg_.cn_tol * kernels::max_abs(be, next_)) {
      std::copy(next_.begin(), next_.end(), psi.begin());
      return iter;
    }
  }
  throw IterationError("crank_nicolson: fixed point did not converge within " +
                       std::to_string(cfg_.cn_max_iter) + " iterations");
}

// ---------------------------------------------------------------------------

namespace {

template <class Integrator>
Trajectory run(Integrator& integrator, const WaveField& initial, const EvolveConfig& cfg,
               const StepObserver& observer) {
  Trajectory traj;
  WaveField state = initial;
  const double t0 = initial.time;
  traj.snapshots.push_back(state);
  traj.steps.push_back(0);
  if (observer) observer(0, state);

  for (std::size_t s = 1; s <= cfg.n_steps; ++s) {
    if constexpr (std::is_same_v<decltype(integrator.step(state.view())), std::size_t>) {
      traj.solver_iterations += integrator.step(state.view());
    } else {
      integrator.step(state.view());
    }
    state.time = t0 + static_cast<double>(s) * cfg.dt;
    if (!all_finite(state.values)) {
      throw NumericalBlowupError(s, "evolution: non-finite value at step " + std::to_string(s));
    }
    const bool last = s == cfg.n_steps;
    if (last || (cfg.record_every > 0 && s % cfg.record_every == 0)) {
      traj.snapshots.push_back(state);
      traj.steps.push_back(s);
    }
    if (observer) observer(s, state);
  }
  return traj;
}

void check_inputs(const WaveField& initial, const PhysicalParams& params, const EvolveConfig& cfg) {
  validate(cfg);
  validate(params, initial.size());
  if (!all_finite(initial.values)) throw DomainError("evolution: initial field is not finite");
}

}  // namespace

Trajectory split_step(const WaveField& initial, const PhysicalParams& params,
                      const EvolveConfig& cfg, const StepObserver& observer) {
  check_inputs(initial, params, cfg);
  SplitStepIntegrator integrator(initial.grid, params, cfg);
  return run(integrator, initial, cfg, observer);
}

Trajectory crank_nicolson(const WaveField& initial, const PhysicalParams& params,
                          const EvolveConfig& cfg, const StepObserver& observer) {
  check_inputs(initial, params, cfg);
  CrankNicolsonIntegrator integrator(initial.grid, params, cfg);
  return run(integrator, initial, cfg, observer);
}

Trajectory evolve(const WaveField& initial, const PhysicalParams& params, const EvolveConfig& cfg,
                  const StepObserver& observer) {
  return cfg.scheme == Scheme::crank_nicolson ? crank_nicolson(initial, params, cfg, observer)
                                              : split_step(initial, params, cfg, observer);
}

double pde_residual(const WaveField& prev, const WaveField& cur, const WaveField& next,
                    const PhysicalParams& params, double density_floor, double log_clamp) {
  if (!(prev.grid == cur.grid) || !(cur.grid == next.grid)) {
    throw DomainError("pde_residual: snapshots on different grids");
  }
  const double d1 = cur.time - prev.time;
  const double d2 = next.time - cur.time;
  if (!(d1 > 0.0) || std::abs(d1 - d2) > 1e-9 * d1) {
    throw DomainError("pde_residual: snapshots are not equally spaced in time");
  }
  validate(params, cur.size());
  const double hbar = params.hbar;
  const auto lap = spectral_derivative(cur.values, cur.grid, 2);
  double peak = 0.0;
  for (const cplx& z : cur.values) peak = std::max(peak, std::norm(z));
  const double log_floor = log_clamp * peak;
  const double kinetic = hbar * hbar / (2.0 * params.mass);

  const double dk = cur.grid.dk();
  double scale = kinetic * dk * dk * std::sqrt(peak);
  double worst = 0.0;
  for (std::size_t j = 0; j < cur.size(); ++j) {
    const double rho = std::norm(cur.values[j]);
    if (rho < density_floor * peak) continue;
    const double w = params.potential_at(j) - params.b * std::log(std::max(rho, log_floor));
    const cplx rhs = -kinetic * lap[j] + w * cur.values[j];
    const cplx lhs = cplx(0.0, hbar) * (next.values[j] - prev.values[j]) / (2.0 * d1);
    worst = std::max(worst, std::abs(lhs - rhs));
    scale = std::max(scale, std::abs(rhs));
  }
  return worst / scale;
}

}  // namespace lognls
