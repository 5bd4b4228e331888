#pragma once

#include <cstddef>
#include <vector>

namespace lognls {

/// Physics configuration of a run. Natural units: hbar = 1 unless overridden.
///
/// `b` is the strength of the logarithmic term -b ln|psi|^2 psi; b = 0 gives the
/// linear Schroedinger equation. `potential` is V(x) sampled on the run's grid, or
/// empty for V = 0.
struct PhysicalParams {
  double hbar = 1.0;
  double mass = 1.0;
  double b = 0.5;
  std::vector<double> potential;

  bool has_potential() const { return !potential.empty(); }
  double potential_at(std::size_t j) const { return potential.empty() ? 0.0 : potential[j]; }
};

/// Throws ConfigError on hbar <= 0, mass <= 0, b < 0, a potential of the wrong
/// length, or a non-finite potential sample.
void validate(const PhysicalParams& params, std::size_t n_points);

}  // namespace lognls
