#include <algorithm>
#include <cmath>
#include <complex>

#include "lognls/kernels.hpp"

namespace lognls::kernels::serial {

void density(std::span<const cplx> psi, std::span<double> out) {
  for (std::size_t j = 0; j < psi.size(); ++j) out[j] = std::norm(psi[j]);
}

double max_density(std::span<const cplx> psi) {
  double m = 0.0;
  for (const cplx& z : psi) m = std::max(m, std::norm(z));
  return m;
}

double sum_density(std::span<const cplx> psi) {
  double s = 0.0;
  for (const cplx& z : psi) s += std::norm(z);
  return s;
}

void nonlinear_phase(std::span<cplx> psi, std::span<const double> potential, const PhaseStep& step) {
  const double rate = step.tau / step.hbar;
  const bool has_v = !potential.empty();
  for (std::size_t j = 0; j < psi.size(); ++j) {
    const double rho = std::max(std::norm(psi[j]), step.density_floor);
    const double w = (has_v ? potential[j] : 0.0) - step.b * std::log(rho);
    psi[j] *= std::polar(1.0, -rate * w);
  }
}

void multiply(std::span<cplx> a, std::span<const cplx> b) {
  for (std::size_t j = 0; j < a.size(); ++j) a[j] *= b[j];
}

void midpoint(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = 0.5 * (a[j] + b[j]);
}

void apply_local_operator(std::span<const cplx> psi, std::span<const double> potential, double b,
                          double density_floor, std::span<cplx> out) {
  const bool has_v = !potential.empty();
  for (std::size_t j = 0; j < psi.size(); ++j) {
    const double rho = std::max(std::norm(psi[j]), density_floor);
    const double w = (has_v ? potential[j] : 0.0) - b * std::log(rho);
    out[j] = w * psi[j];
  }
}

void cayley_update(std::span<const cplx> current_hat, std::span<const cplx> source_hat,
                   std::span<const cplx> propagate, std::span<const cplx> couple,
                   std::span<cplx> out) {
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = propagate[j] * current_hat[j] + couple[j] * source_hat[j];
  }
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

double max_abs(std::span<const cplx> a) {
  double m = 0.0;
  for (const cplx& z : a) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace lognls::kernels::serial
