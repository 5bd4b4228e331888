#include "lognls/madelung.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lognls/errors.hpp"
#include "lognls/fft.hpp"
#include "lognls/spectral.hpp"

namespace lognls {

namespace {

double peak_of(std::span<const double> xs) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, x);
  return m;
}

void check_floor(double density_floor) {
  if (!(density_floor > 0.0) || density_floor > 1e-3) {
    throw DomainError("madelung: density_floor must lie in (0, 1e-3]");
  }
}

void check_pair(const WaveField& earlier, const WaveField& later) {
  if (!(earlier.grid == later.grid)) throw DomainError("madelung: snapshots on different grids");
  if (later.time == earlier.time) throw DomainError("madelung: snapshots at the same time");
}

// psi and its first `order` spectral derivatives, sharing one forward transform.
std::vector<std::vector<cplx>> derivative_stack(const WaveField& field, int order, FftPlan& plan) {
  const std::size_t n = field.size();
  std::vector<cplx> spectrum(n);
  plan.forward(field.values, spectrum);
  std::vector<std::vector<cplx>> out;
  out.push_back(field.values);
  const double scale = 1.0 / static_cast<double>(n);
  for (int p = 1; p <= order; ++p) {
    std::vector<cplx> d(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (p % 2 == 1 && j == n / 2) continue;
      const cplx ik(0.0, field.grid.wavenumber(j));
      cplx factor = scale;
      for (int q = 0; q < p; ++q) factor *= ik;
      d[j] = factor * spectrum[j];
    }
    plan.backward(d, d);
    out.push_back(std::move(d));
  }
  return out;
}

struct ContinuityTerms {
  std::vector<double> density;
  std::vector<double> flux_divergence;
};

ContinuityTerms continuity_terms(const WaveField& f, const PhysicalParams& params, FftPlan& plan) {
  const auto d = derivative_stack(f, 2, plan);
  const double coeff = params.hbar / params.mass;
  ContinuityTerms t;
  t.density.resize(f.size());
  t.flux_divergence.resize(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    t.density[j] = std::norm(d[0][j]);
    // (n v)' = (hbar/m) Im(conj(psi) psi''); the |psi'|^2 part of the product rule is real.
    t.flux_divergence[j] = coeff * (std::conj(d[0][j]) * d[2][j]).imag();
  }
  return t;
}

struct EulerTerms {
  std::vector<double> density;
  std::vector<double> velocity;
  std::vector<double> convective;  // v v'
  std::vector<double> bohm_force;  // V_q'
  std::vector<double> log_force;   // F'
};

EulerTerms euler_terms(const WaveField& f, const PhysicalParams& params, double log_clamp,
                       FftPlan& plan) {
  const auto d = derivative_stack(f, 3, plan);
  const std::size_t len = f.size();
  const double hbar = params.hbar;
  const double m = params.mass;
  double peak = 0.0;
  for (const cplx& z : d[0]) peak = std::max(peak, std::norm(z));
  const double log_floor = log_clamp * peak;

  EulerTerms t;
  t.density.resize(len);
  t.velocity.resize(len);
  t.convective.resize(len);
  t.bohm_force.resize(len);
  t.log_force.resize(len);
  for (std::size_t j = 0; j < len; ++j) {
    const cplx p0 = d[0][j];
    const cplx p1 = d[1][j];
    const cplx p2 = d[2][j];
    const cplx p3 = d[3][j];
    const double n = std::norm(p0);
    t.density[j] = n;
    if (n <= 0.0) continue;
    const double n1 = 2.0 * (std::conj(p0) * p1).real();
    const double n2 = 2.0 * (std::conj(p0) * p2).real() + 2.0 * std::norm(p1);
    const double flux = (std::conj(p0) * p1).imag();
    const double flux1 = (std::conj(p0) * p2).imag();
    const double v = (hbar / m) * flux / n;
    const double v1 = (hbar / m) * (flux1 / n - flux * n1 / (n * n));
    // Q = (sqrt n)''/sqrt n = (U + W)/n - n'^2/(4 n^2), U = Re(conj psi psi''), W = |psi'|^2.
    const double u = (std::conj(p0) * p2).real();
    const double u1 = (std::conj(p1) * p2).real() + (std::conj(p0) * p3).real();
    const double w = std::norm(p1);
    const double w1 = 2.0 * (std::conj(p1) * p2).real();
    const double q1 = (u1 + w1) / n - (u + w) * n1 / (n * n) - n1 * n2 / (2.0 * n * n) +
                      n1 * n1 * n1 / (2.0 * n * n * n);
    t.velocity[j] = v;
    t.convective[j] = v * v1;
    t.bohm_force[j] = -(hbar * hbar / (2.0 * m)) * q1;
    // F = -b ln n is flat where the clamp is active.
    t.log_force[j] = n > log_floor ? -params.b * n1 / n : 0.0;
  }
  return t;
}

std::vector<std::uint8_t> joint_mask(std::span<const double> n0, std::span<const double> n1,
                                     double density_floor) {
  const double f0 = density_floor * peak_of(n0);
  const double f1 = density_floor * peak_of(n1);
  std::vector<std::uint8_t> mask(n0.size());
  for (std::size_t j = 0; j < n0.size(); ++j) mask[j] = (n0[j] >= f0 && n1[j] >= f1) ? 1 : 0;
  return mask;
}

}  // namespace

HydroFields decompose(const WaveField& field, const PhysicalParams& params, double density_floor) {
  check_floor(density_floor);
  validate(params, field.size());
  const std::size_t len = field.size();
  HydroFields h;
  h.density = density(field);
  const double peak = peak_of(h.density);
  if (!(peak > 0.0)) throw DomainError("decompose: field is identically zero");

  h.mask.resize(len);
  for (std::size_t j = 0; j < len; ++j) h.mask[j] = h.density[j] >= density_floor * peak ? 1 : 0;

  // Unwrap left to right over unmasked points; S is frozen across masked runs.
  h.action.assign(len, 0.0);
  bool started = false;
  double last_raw = 0.0;
  double unwrapped = 0.0;
  std::size_t first_unmasked = len;
  for (std::size_t j = 0; j < len; ++j) {
    if (h.mask[j]) {
      const double raw = std::arg(field.values[j]);
      if (!started) {
        unwrapped = raw;
        first_unmasked = j;
        started = true;
      } else {
        double jump = raw - last_raw;
        jump -= 2.0 * std::numbers::pi * std::round(jump / (2.0 * std::numbers::pi));
        unwrapped += jump;
      }
      last_raw = raw;
    }
    h.action[j] = params.hbar * unwrapped;
  }
  for (std::size_t j = 0; j < first_unmasked; ++j) h.action[j] = h.action[first_unmasked];

  const auto dpsi = spectral_derivative(field.values, field.grid, 1);
  h.velocity.assign(len, 0.0);
  for (std::size_t j = 0; j < len; ++j) {
    if (!h.mask[j]) continue;
    h.velocity[j] =
        (params.hbar / params.mass) * (std::conj(field.values[j]) * dpsi[j]).imag() / h.density[j];
  }
  h.bohm_potential = bohm_potential(h.density, field.grid, params, h.mask);
  return h;
}

WaveField recompose(const HydroFields& hydro, const Grid1D& grid, const PhysicalParams& params,
                    double time) {
  std::vector<cplx> values(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    values[j] = std::polar(std::sqrt(hydro.density[j]), hydro.action[j] / params.hbar);
  }
  return WaveField(grid, std::move(values), time);
}

std::vector<double> bohm_potential(std::span<const double> density, const Grid1D& grid,
                                   const PhysicalParams& params,
                                   std::span<const std::uint8_t> mask) {
  if (density.size() != grid.size() || mask.size() != grid.size()) {
    throw DomainError("bohm_potential: size mismatch");
  }
  std::vector<double> amplitude(density.size());
  for (std::size_t j = 0; j < density.size(); ++j) amplitude[j] = std::sqrt(density[j]);
  const auto lap = spectral_derivative(amplitude, grid, 2);
  const double coeff = -params.hbar * params.hbar / (2.0 * params.mass);
  std::vector<double> vq(density.size(), 0.0);
  for (std::size_t j = 0; j < density.size(); ++j) {
    if (mask[j] && amplitude[j] > 0.0) vq[j] = coeff * lap[j] / amplitude[j];
  }
  return vq;
}

std::vector<double> pressure(std::span<const double> density, double b) {
  std::vector<double> p(density.size());
  for (std::size_t j = 0; j < density.size(); ++j) p[j] = -b * density[j];
  return p;
}

EnthalpyTerm enthalpy_term(const WaveField& field, double b, double density_floor,
                           double log_clamp) {
  check_floor(density_floor);
  const auto n = density(field);
  const double peak = peak_of(n);
  EnthalpyTerm out;
  out.value.resize(n.size());
  const double log_floor = log_clamp * peak;
  for (std::size_t j = 0; j < n.size(); ++j) {
    const double rho = std::max(n[j], log_floor);
    out.value[j] = rho > 0.0 ? -b * std::log(rho) : 0.0;
  }
  if (!(peak > 0.0) || b == 0.0) return out;

  FftPlan plan(field.size());
  const auto dpsi = spectral_derivative(field.values, field.grid, 1, plan);
  const auto p = pressure(n, b);
  const auto dp = spectral_derivative(p, field.grid, 1, plan);
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (n[j] < density_floor * peak) continue;
    const double grad_f = -b * 2.0 * (std::conj(field.values[j]) * dpsi[j]).real() / n[j];
    const double grad_p_over_n = dp[j] / n[j];
    worst = std::max(worst, std::abs(grad_f - grad_p_over_n));
    scale = std::max(scale, std::abs(grad_f));
  }
  out.gradient_mismatch = scale > 0.0 ? worst / scale : worst;
  return out;
}

double continuity_residual(const WaveField& earlier, const WaveField& later,
                           const PhysicalParams& params, double density_floor) {
  check_pair(earlier, later);
  check_floor(density_floor);
  validate(params, earlier.size());
  const double dt = later.time - earlier.time;
  FftPlan plan(earlier.size());
  const auto t0 = continuity_terms(earlier, params, plan);
  const auto t1 = continuity_terms(later, params, plan);
  const auto mask = joint_mask(t0.density, t1.density, density_floor);

  const double dk = earlier.grid.dk();
  double scale = std::max(peak_of(t0.density), peak_of(t1.density)) * params.hbar * dk * dk /
                 params.mass;
  double worst = 0.0;
  for (std::size_t j = 0; j < mask.size(); ++j) {
    if (!mask[j]) continue;
    const double div = 0.5 * (t0.flux_divergence[j] + t1.flux_divergence[j]);
    const double res = (t1.density[j] - t0.density[j]) / dt + div;
    worst = std::max(worst, std::abs(res));
    scale = std::max(scale, std::abs(div));
  }
  return worst / scale;
}

double euler_residual(const WaveField& earlier, const WaveField& later,
                      const PhysicalParams& params, double density_floor, double log_clamp) {
  check_pair(earlier, later);
  check_floor(density_floor);
  validate(params, earlier.size());
  const double dt = later.time - earlier.time;
  const double m = params.mass;
  FftPlan plan(earlier.size());
  const auto e0 = euler_terms(earlier, params, log_clamp, plan);
  const auto e1 = euler_terms(later, params, log_clamp, plan);
  const auto mask = joint_mask(e0.density, e1.density, density_floor);

  std::vector<double> dv_ext(earlier.size(), 0.0);
  if (params.has_potential()) dv_ext = spectral_derivative(params.potential, earlier.grid, 1, plan);

  const double dk = earlier.grid.dk();
  double scale = params.hbar * params.hbar * dk * dk * dk / m;
  double worst = 0.0;
  for (std::size_t j = 0; j < mask.size(); ++j) {
    if (!mask[j]) continue;
    const double accel = m * (e1.velocity[j] - e0.velocity[j]) / dt;
    const double conv = m * 0.5 * (e0.convective[j] + e1.convective[j]);
    const double bohm = 0.5 * (e0.bohm_force[j] + e1.bohm_force[j]);
    const double logf = 0.5 * (e0.log_force[j] + e1.log_force[j]);
    const double res = accel + conv + dv_ext[j] + bohm + logf;
    worst = std::max(worst, std::abs(res));
    scale = std::max({scale, std::abs(accel), std::abs(conv), std::abs(dv_ext[j]),
                      std::abs(bohm), std::abs(logf)});
  }
  return worst / scale;
}

}  // namespace lognls
