#pragma once

#include <utility>

#include "lognls/grid.hpp"
#include "lognls/physical_params.hpp"
#include "lognls/wave_field.hpp"

namespace lognls {

/// Parameter bundle of the travelling gausson
///
///   psi(x, t) = c exp(a/B) exp(-(B/4)(x - v t + d)^2) exp(i k x - i omega t)
///
/// where the profile G(xi) = exp(a/B) exp(-(B/4)(xi + d)^2) solves
/// G'' + A G + B ln(G) G = 0 with
///   A = (2m/hbar) omega - k^2 + (2m/hbar^2) b ln c^2,
///   B = 4 m b / hbar^2,
///   a = B/2 - A,
///   v = hbar k / m.
/// `alpha` = 2b/hbar^2 is the width constant of the mass-scaled density
/// delta_m(xi) = sqrt(m alpha / pi) exp(-alpha m xi^2).
struct GaussonParams {
  double c = 1.0;
  double k = 0.0;
  double omega = 0.0;
  double v = 0.0;
  double d = 0.0;
  double A = 0.0;
  double B = 0.0;
  double a = 0.0;
  double alpha = 0.0;

  /// c^2 exp(2a/B), the density at the centre.
  double peak_density() const;
  /// Standard deviation of |psi|^2, 1/sqrt(B) = hbar / (2 sqrt(b m)).
  double width() const;
  /// The profile G(xi) (no amplitude c, no phase).
  double profile(double xi) const;
};

/// Fills every coefficient from (hbar, m, b) and the free choices (k, omega, c).
/// Throws DomainError when b == 0 (no gausson in the linear equation) or c <= 0.
GaussonParams coefficients_from_physics(const PhysicalParams& params, double k, double omega,
                                        double c, double d = 0.0);

/// Chooses omega so that the gausson has unit norm for the given amplitude c:
/// c^2 exp(2a/B) = sqrt(B / 2 pi), i.e. a = (B/4) ln(B / (2 pi c^4)).
GaussonParams solve_omega_for_normalization(const PhysicalParams& params, double k, double c = 1.0,
                                            double d = 0.0);

/// Samples the travelling gausson at time t. Throws BoxTooSmallError if the
/// amplitude at either end of the box exceeds 1e-12 of the peak amplitude.
WaveField sample_gausson(const GaussonParams& gp, const Grid1D& grid, double t);

/// sqrt(m alpha / pi) exp(-alpha m xi^2). Throws DomainError unless m > 0 and alpha > 0.
double delta_m_density(double mass, double alpha, double xi);

/// The normalized plane wave (2 pi)^(-1/2) exp(i k x) and its frequency
/// hbar omega = hbar^2 k^2 / 2m + b ln(2 pi). Throws ConfigError if k is not a
/// grid wavenumber.
std::pair<WaveField, double> plane_wave(const Grid1D& grid, double k, const PhysicalParams& params);

/// Closed-form solution of the linear (b = 0, V = 0) equation: a Gaussian packet
/// with initial density variance sigma0^2, centre x0 and carrier exp(i k x), at time t.
/// At t = 0 it coincides with a normalized gausson of the same width and centre.
WaveField free_gaussian_packet(const Grid1D& grid, const PhysicalParams& params, double sigma0,
                               double x0, double k, double t);

}  // namespace lognls
