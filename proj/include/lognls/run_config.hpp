#pragma once

#include <cstddef>
#include <numbers>
#include <string>
#include <string_view>

#include "lognls/evolution.hpp"
#include "lognls/grid.hpp"
#include "lognls/physical_params.hpp"

namespace lognls {

inline constexpr std::string_view kVersion = "0.1.0";

enum class PotentialKind { none, harmonic };

struct PhysicsSettings {
  double hbar = 1.0;
  double mass = 1.0;
  double b = 0.5;
  PotentialKind potential = PotentialKind::none;
  double potential_omega = 1.0;   ///< harmonic: V = m omega^2 (x - centre)^2 / 2
  double potential_center = 0.0;

  bool operator==(const PhysicsSettings&) const = default;
};

struct GridSettings {
  double x_min = -20.0 * std::numbers::pi;
  double x_max = 20.0 * std::numbers::pi;
  std::size_t n_points = 1024;

  Grid1D make() const { return Grid1D(x_min, x_max, n_points); }
  bool operator==(const GridSettings&) const = default;
};

/// Keys of the [scenario] section. Each scenario reads the subset it needs.
struct ScenarioSettings {
  std::string name;

  // free_gausson, superposition, plane_wave, mass_sweep
  double k = 1.0;
  double c = 1.0;
  double d = 0.0;
  double profile_b = 0.5;  ///< width of the initial packet when physics.b = 0
  bool convergence_check = true;

  // superposition
  double x0 = 8.0;
  double residual_dt = 1e-4;

  // mass_sweep
  double mass_min = 1.0;
  double mass_ratio = 2.0;
  std::size_t mass_count = 8;

  // knife_edge
  double packet_center = 0.0;
  double packet_halfwidth = 30.0;
  double aperture_edge = 0.0;
  double fringe_smoothing = 0.2;
  double fringe_search = 20.0;

  // `residual` command
  std::string snapshots;
  double residual_time = 0.0;

  bool operator==(const ScenarioSettings&) const = default;
};

struct OutputSettings {
  std::string dir = "out";

  bool operator==(const OutputSettings&) const = default;
};

struct RunConfig {
  PhysicsSettings physics;
  GridSettings grid;
  EvolveConfig evolve;
  ScenarioSettings scenario;
  OutputSettings output;

  bool operator==(const RunConfig&) const = default;
};

/// Samples the configured potential on the grid.
PhysicalParams make_physical_params(const PhysicsSettings& settings, const Grid1D& grid);

}  // namespace lognls
