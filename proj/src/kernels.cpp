#include "lognls/kernels.hpp"

namespace lognls::kernels {

double max_density(Backend be, std::span<const cplx> psi) {
  return be == Backend::openmp ? omp::max_density(psi) : serial::max_density(psi);
}

double sum_density(Backend be, std::span<const cplx> psi) {
  return be == Backend::openmp ? omp::sum_density(psi) : serial::sum_density(psi);
}

void nonlinear_phase(Backend be, std::span<cplx> psi, std::span<const double> potential,
                     const PhaseStep& step) {
  if (be == Backend::openmp) {
    omp::nonlinear_phase(psi, potential, step);
  } else {
    serial::nonlinear_phase(psi, potential, step);
  }
}

void multiply(Backend be, std::span<cplx> a, std::span<const cplx> b) {
  if (be == Backend::openmp) {
    omp::multiply(a, b);
  } else {
    serial::multiply(a, b);
  }
}

void midpoint(Backend be, std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
  if (be == Backend::openmp) {
    omp::midpoint(a, b, out);
  } else {
    serial::midpoint(a, b, out);
  }
}

void apply_local_operator(Backend be, std::span<const cplx> psi, std::span<const double> potential,
                          double b, double density_floor, std::span<cplx> out) {
  if (be == Backend::openmp) {
    omp::apply_local_operator(psi, potential, b, density_floor, out);
  } else {
    serial::apply_local_operator(psi, potential, b, density_floor, out);
  }
}

void cayley_update(Backend be, std::span<const cplx> current_hat, std::span<const cplx> source_hat,
                   std::span<const cplx> propagate, std::span<const cplx> couple,
                   std::span<cplx> out) {
  if (be == Backend::openmp) {
    omp::cayley_update(current_hat, source_hat, propagate, couple, out);
  } else {
    serial::cayley_update(current_hat, source_hat, propagate, couple, out);
  }
}

double max_abs_diff(Backend be, std::span<const cplx> a, std::span<const cplx> b) {
  return be == Backend::openmp ? omp::max_abs_diff(a, b) : serial::max_abs_diff(a, b);
}

double max_abs(Backend be, std::span<const cplx> a) {
  return be == Backend::openmp ? omp::max_abs(a) : serial::max_abs(a);
}

}  // namespace lognls::kernels
