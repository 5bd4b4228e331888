#pragma once

#include <complex>
#include <span>
#include <vector>

#include "lognls/grid.hpp"

namespace lognls {

using cplx = std::complex<double>;

/// Complex wavefunction samples on a grid at a given simulation time.
struct WaveField {
  /// Zero field.
  explicit WaveField(Grid1D g, double t = 0.0);
  /// Throws DomainError if the sample count differs from the grid or a sample is not finite.
  WaveField(Grid1D g, std::vector<cplx> v, double t = 0.0);

  std::size_t size() const { return values.size(); }
  std::span<const cplx> view() const { return values; }
  std::span<cplx> view() { return values; }

  Grid1D grid;
  std::vector<cplx> values;
  double time = 0.0;
};

bool all_finite(std::span<const cplx> values);

}  // namespace lognls
