#include "lognls/physical_params.hpp"

#include <cmath>
#include <string>

#include "lognls/errors.hpp"

namespace lognls {

void validate(const PhysicalParams& params, std::size_t n_points) {
  if (!(params.hbar > 0.0) || !std::isfinite(params.hbar)) {
    throw ConfigError("physics: hbar must be positive");
  }
  if (!(params.mass > 0.0) || !std::isfinite(params.mass)) {
    throw ConfigError("physics: mass must be positive");
  }
  if (!(params.b >= 0.0) || !std::isfinite(params.b)) {
    throw ConfigError("physics: b must be non-negative");
  }
  if (params.has_potential()) {
    if (params.potential.size() != n_points) {
      throw ConfigError("physics: potential has " + std::to_string(params.potential.size()) +
                        " samples, grid has " + std::to_string(n_points));
    }
    for (double v : params.potential) {
      if (!std::isfinite(v)) throw ConfigError("physics: potential contains a non-finite sample");
    }
  }
}

}  // namespace lognls
