#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lognls/observables.hpp"
#include "lognls/physical_params.hpp"
#include "lognls/wave_field.hpp"

namespace lognls {

/// Default density floor, relative to the peak, below which hydrodynamic
/// quantities are not evaluated.
inline constexpr double kDefaultDensityFloor = 1e-8;

/// Madelung variables psi = sqrt(n) exp(i S / hbar).
struct HydroFields {
  std::vector<double> density;         ///< n = |psi|^2
  std::vector<double> action;          ///< S, phase unwrapped left to right, times hbar
  std::vector<double> velocity;        ///< v = S'/m (zero on masked points)
  std::vector<double> bohm_potential;  ///< V_q = -(hbar^2/2m) (sqrt n)'' / sqrt n
  std::vector<std::uint8_t> mask;      ///< 1 where n >= floor * max n
};

/// Throws DomainError for an identically zero field or a floor outside (0, 1e-3].
HydroFields decompose(const WaveField& field, const PhysicalParams& params,
                      double density_floor = kDefaultDensityFloor);

/// sqrt(n) exp(i S / hbar); inverse of decompose on unmasked points.
WaveField recompose(const HydroFields& hydro, const Grid1D& grid, const PhysicalParams& params,
                    double time = 0.0);

/// -(hbar^2/2m) (sqrt n)'' / sqrt n with a spectral Laplacian; zero on masked points.
std::vector<double> bohm_potential(std::span<const double> density, const Grid1D& grid,
                                   const PhysicalParams& params, std::span<const std::uint8_t> mask);

/// p = -b n.
std::vector<double> pressure(std::span<const double> density, double b);

struct EnthalpyTerm {
  std::vector<double> value;  ///< F = -b ln|psi|^2 (clamped logarithm)
  /// max |F' - p'/n| / max |F'| over unmasked points. F' is obtained by the chain
  /// rule from the spectral derivative of psi; p'/n from the spectral derivative of
  /// p = -b n, so the two sides use independent numerical routes.
  double gradient_mismatch = 0.0;
};

EnthalpyTerm enthalpy_term(const WaveField& field, double b,
                           double density_floor = kDefaultDensityFloor,
                           double log_clamp = kDefaultLogClamp);

/// max |dn/dt + (n v)'| over unmasked points, from two snapshots at t and t + dt:
/// forward difference in time, spatial term averaged over the two snapshots (both
/// centred at t + dt/2). Normalized by max |(n v)'|, floored at the slowest
/// kinetic rate the grid resolves (hbar dk^2 / m times the peak density).
double continuity_residual(const WaveField& earlier, const WaveField& later,
                           const PhysicalParams& params,
                           double density_floor = kDefaultDensityFloor);

/// max |m (dv/dt + v v') + (V + V_q)' + F'| over unmasked points, with the same
/// time centring as continuity_residual. Normalized by the largest individual term,
/// floored at hbar^2 dk^3 / m. All spatial derivatives are evaluated pointwise from
/// spectral derivatives of psi, so nothing is differentiated across masked regions.
double euler_residual(const WaveField& earlier, const WaveField& later,
                      const PhysicalParams& params, double density_floor = kDefaultDensityFloor,
                      double log_clamp = kDefaultLogClamp);

}  // namespace lognls
