#pragma once

#include <vector>

#include "lognls/physical_params.hpp"
#include "lognls/wave_field.hpp"

namespace lognls {

/// Default relative floor under ln|psi|^2 (relative to the peak density).
inline constexpr double kDefaultLogClamp = 1e-30;

/// sum_j |psi_j|^2 dx. On a periodic grid this is both the rectangle and the trapezoid rule.
double total_norm(const WaveField& field);

/// E = sum_j [ (hbar^2/2m)|psi'_j|^2 + V_j |psi_j|^2 - b |psi_j|^2 (ln|psi_j|^2 - 1) ] dx,
/// with a spectral derivative and the logarithm clamped at log_clamp * max|psi|^2.
/// This is the Hamiltonian whose variation in psi* gives the right-hand side of the
/// evolution equation, so the integrators should conserve it.
double energy(const WaveField& field, const PhysicalParams& params,
              double log_clamp = kDefaultLogClamp);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

/// Mean and variance of x under the normalized density |psi|^2. Throws DomainError on zero norm.
Moments moments(const WaveField& field);

std::vector<double> density(const WaveField& field);

/// sqrt(sum_j |a_j - b_j|^2 dx). Throws DomainError if the grids differ.
double l2_distance(const WaveField& a, const WaveField& b);

/// Position of the density maximum, refined by a three-point parabola through the
/// discrete maximum and its periodic neighbours.
double peak_position(const WaveField& field);

}  // namespace lognls
