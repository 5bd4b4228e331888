#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lognls/run_config.hpp"
#include "lognls/wave_field.hpp"

namespace lognls {

struct Verdict {
  std::string criterion;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// measured <= tolerance
Verdict at_most(std::string criterion, double measured, double tolerance);
/// measured >= threshold
Verdict at_least(std::string criterion, double measured, double threshold);
/// measured > threshold
Verdict above(std::string criterion, double measured, double threshold);

struct SnapshotSeries {
  std::string file_name;
  std::vector<WaveField> snapshots;
};

struct ScenarioReport {
  std::string name;
  RunConfig config;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<Verdict> verdicts;
  std::vector<std::pair<std::string, double>> metrics;
  std::vector<SnapshotSeries> snapshots;

  bool passed() const;
  const Verdict* find(const std::string& criterion) const;
  double metric(const std::string& name) const;
  std::vector<double> column(const std::string& name) const;
};

const std::vector<std::string>& scenario_names();

/// Gausson transport against the closed form (or, at b = 0, against the spreading
/// free packet): peak displacement, L2 error, dt-halving convergence ratio, norm,
/// energy and width drift.
ScenarioReport scenario_free_gausson(const RunConfig& cfg);
/// Width of the normalized gausson for a geometric ladder of masses and its log-log slope.
ScenarioReport scenario_mass_sweep(const RunConfig& cfg);
/// Rotation rate of the plane wave's Fourier coefficient against the dispersion relation.
ScenarioReport scenario_plane_wave(const RunConfig& cfg);
/// Equation residual of one gausson versus the normalized sum of two.
ScenarioReport scenario_superposition(const RunConfig& cfg);
/// Edge diffraction from a hard aperture, linear versus nonlinear fringe contrast.
ScenarioReport scenario_knife_edge(const RunConfig& cfg);

/// Dispatches on cfg.scenario.name; throws ConfigError for an unknown name.
ScenarioReport run_scenario(const RunConfig& cfg);

}  // namespace lognls
