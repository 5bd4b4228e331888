#include <omp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "lognls/kernels.hpp"

namespace lognls::kernels::omp {

namespace {

// Loop bounds are signed for OpenMP's canonical loop form.
long as_index(std::size_t n) { return static_cast<long>(n); }

template <class Accumulate>
double chunked_sum(std::size_t n, Accumulate&& term) {
  std::array<double, kReductionChunks> partial{};
  const std::size_t chunk = (n + kReductionChunks - 1) / kReductionChunks;
#pragma omp parallel for schedule(static)
  for (long c = 0; c < static_cast<long>(kReductionChunks); ++c) {
    const std::size_t lo = std::min(n, static_cast<std::size_t>(c) * chunk);
    const std::size_t hi = std::min(n, lo + chunk);
    double s = 0.0;
    for (std::size_t j = lo; j < hi; ++j) s += term(j);
    partial[static_cast<std::size_t>(c)] = s;
  }
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

}  // namespace

void density(std::span<const cplx> psi, std::span<double> out) {
  const long n = as_index(psi.size());
#pragma omp parallel for schedule(static)
  for (long j = 0; j < n; ++j) out[j] = std::norm(psi[j]);
}

double max_density(std::span<const cplx> psi) {
  const long n = as_index(psi.size());
  double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m)
  for (long j = 0; j < n; ++j) m = std::max(m, std::norm(psi[j]));
  return m;
}

double sum_density(std::span<const cplx> psi) {
  return chunked_sum(psi.size(), [&](std::size_t j) { return std::norm(psi[j]); });
}

void nonlinear_phase(std::span<cplx> psi, std::span<const double> potential, const PhaseStep& step) {
  const double rate = step.tau / step.hbar;
  const bool has_v = !potential.empty();
  const long n = as_index(psi.size());
#pragma omp parallel for schedule(static)
  for (long j = 0; j < n; ++j) {
    const double rho = std::max(std::norm(psi[j]), step.density_floor);
    const double w = (has_v ? potential[j] : 0.0) - step.b * std::log(rho);
    psi[j] *= std::polar(1.0, -rate * w);
  }
}

void multiply(std::span<cplx> a, std::span<const cplx> b) {
  const long n = as_index(a.size());
#pragma omp parallel for schedule(static)
  for (long j = 0; j < n; ++j) a[j] *= b[j];
}

void midpoint(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
  const long n = as_index(a.size());
#pragma omp parallel for schedule(static)
  for (long j = 0; j < n; ++j) out[j] = 0.5 * (a[j] + b[j]);
}

void apply_local_operator(std::span<const cplx> psi, std::span<const double> potential, double b,
                          double density_floor, std::span<cplx> out) {
  const bool has_v = !potential.empty();
  const long n = as_index(psi.size());
#pragma omp parallel for schedule(static)
  for (long j = 0; j < n; ++j) {
    const double rho = std::max(std::norm(psi[j]), density_floor);
    const double w = (has_v ? potential[j] : 0.0) - b * std::log(rho);
    out[j] = w * psi[j];
  }
}

void cayley_update(std::span<const cplx> current_hat, std::span<const cplx> source_hat,
                   std::span<const cplx> propagate, std::span<const cplx> couple,
                   std::span<cplx> out) {
  const long n = as_index(out.size());
#pragma omp parallel for schedule(static)
  for (long j = 0; j < n; ++j) {
    out[j] = propagate[j] * current_hat[j] + couple[j] * source_hat[j];
  }
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  const long n = as_index(a.size());
  double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m)
  for (long j = 0; j < n; ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

double max_abs(std::span<const cplx> a) {
  const long n = as_index(a.size());
  double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m)
  for (long j = 0; j < n; ++j) m = std::max(m, std::abs(a[j]));
  return m;
}

}  // namespace lognls::kernels::omp
