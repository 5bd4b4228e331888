#include "lognls/wave_field.hpp"

#include <cmath>
#include <string>

#include "lognls/errors.hpp"

namespace lognls {

WaveField::WaveField(Grid1D g, double t) : grid(g), values(g.size()), time(t) {}

WaveField::WaveField(Grid1D g, std::vector<cplx> v, double t)
    : grid(g), values(std::move(v)), time(t) {
  if (values.size() != grid.size()) {
    throw DomainError("wave field: " + std::to_string(values.size()) + " samples on a grid of " +
                      std::to_string(grid.size()));
  }
  if (!all_finite(values)) throw DomainError("wave field: non-finite sample");
}

bool all_finite(std::span<const cplx> values) {
  for (const cplx& z : values) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

}  // namespace lognls
