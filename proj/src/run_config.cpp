#include "lognls/run_config.hpp"

namespace lognls {

PhysicalParams make_physical_params(const PhysicsSettings& settings, const Grid1D& grid) {
  PhysicalParams params;
  params.hbar = settings.hbar;
  params.mass = settings.mass;
  params.b = settings.b;
  if (settings.potential == PotentialKind::harmonic) {
    params.potential.resize(grid.size());
    const double stiffness = settings.mass * settings.potential_omega * settings.potential_omega;
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const double u = grid.x(j) - settings.potential_center;
      params.potential[j] = 0.5 * stiffness * u * u;
    }
  }
  validate(params, grid.size());
  return params;
}

}  // namespace lognls
