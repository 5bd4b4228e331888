#pragma once

// Hot loops of the time integrators. Every kernel exists twice: a plain serial
// loop kept as the reference, and an OpenMP version. Pointwise kernels produce
// bit-identical output in both versions. Sums are accumulated over a fixed
// partition of the index range, so the OpenMP result does not depend on the
// thread count (it may differ from the serial sum in the last bits).

#include <cstddef>
#include <span>

#include "lognls/wave_field.hpp"

namespace lognls::kernels {

enum class Backend { serial, openmp };

/// Parameters of one multiplication psi *= exp(-i tau/hbar (V - b ln max(|psi|^2, floor))).
struct PhaseStep {
  double tau = 0.0;
  double hbar = 1.0;
  double b = 0.0;
  double density_floor = 0.0;  ///< absolute floor under the logarithm
};

/// Fixed chunk count used by the deterministic reductions.
inline constexpr std::size_t kReductionChunks = 64;

namespace serial {

void density(std::span<const cplx> psi, std::span<double> out);
double max_density(std::span<const cplx> psi);
double sum_density(std::span<const cplx> psi);
void nonlinear_phase(std::span<cplx> psi, std::span<const double> potential, const PhaseStep& step);
void multiply(std::span<cplx> a, std::span<const cplx> b);
void midpoint(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);
void apply_local_operator(std::span<const cplx> psi, std::span<const double> potential, double b,
                          double density_floor, std::span<cplx> out);
void cayley_update(std::span<const cplx> current_hat, std::span<const cplx> source_hat,
                   std::span<const cplx> propagate, std::span<const cplx> couple,
                   std::span<cplx> out);
double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b);
double max_abs(std::span<const cplx> a);

}  // namespace serial

namespace omp {

void density(std::span<const cplx> psi, std::span<double> out);
double max_density(std::span<const cplx> psi);
double sum_density(std::span<const cplx> psi);
void nonlinear_phase(std::span<cplx> psi, std::span<const double> potential, const PhaseStep& step);
void multiply(std::span<cplx> a, std::span<const cplx> b);
void midpoint(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);
void apply_local_operator(std::span<const cplx> psi, std::span<const double> potential, double b,
                          double density_floor, std::span<cplx> out);
void cayley_update(std::span<const cplx> current_hat, std::span<const cplx> source_hat,
                   std::span<const cplx> propagate, std::span<const cplx> couple,
                   std::span<cplx> out);
double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b);
double max_abs(std::span<const cplx> a);

}  // namespace omp

// Backend dispatch.
double max_density(Backend be, std::span<const cplx> psi);
double sum_density(Backend be, std::span<const cplx> psi);
void nonlinear_phase(Backend be, std::span<cplx> psi, std::span<const double> potential,
                     const PhaseStep& step);
void multiply(Backend be, std::span<cplx> a, std::span<const cplx> b);
void midpoint(Backend be, std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);
void apply_local_operator(Backend be, std::span<const cplx> psi, std::span<const double> potential,
                          double b, double density_floor, std::span<cplx> out);
void cayley_update(Backend be, std::span<const cplx> current_hat, std::span<const cplx> source_hat,
                   std::span<const cplx> propagate, std::span<const cplx> couple,
                   std::span<cplx> out);
double max_abs_diff(Backend be, std::span<const cplx> a, std::span<const cplx> b);
double max_abs(Backend be, std::span<const cplx> a);

}  // namespace lognls::kernels
