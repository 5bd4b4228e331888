#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "lognls/run_config.hpp"

namespace lognls {

/// Parses the sectioned `key = value` format:
///
///   # comment (also ';'), whole lines only
///   [physics]   hbar, mass, b, potential (none|harmonic), potential_omega, potential_center
///   [grid]      x_min, x_max, n_points
///   [evolve]    dt, n_steps, scheme (split_step|crank_nicolson), log_clamp, cn_tol,
///               cn_max_iter, record_every, backend (serial|openmp)
///   [scenario]  name (required) and the scenario keys of ScenarioSettings
///   [output]    dir
///
/// Missing keys keep their defaults. The [scenario] section is required. Numbers are
/// read with std::from_chars, so parsing does not depend on the locale. Unknown
/// sections or keys, duplicate keys, malformed values and failed validation throw
/// ConfigError; syntax errors carry the line number.
RunConfig parse_config(std::string_view text);

/// Reads and parses a file. Throws IoError if it cannot be read.
RunConfig load_config(const std::filesystem::path& path);

/// Renders every key, using shortest round-trip number formatting, so that
/// parse_config(render_config(c)) == c.
std::string render_config(const RunConfig& cfg);

/// One "section.key = value" line per config key, in a fixed order.
std::vector<std::string> manifest_lines(const RunConfig& cfg);

/// Throws ConfigError if any field is out of range (grid, physics, evolve, scenario, output).
void validate(const RunConfig& cfg);

/// Shortest string that std::from_chars reads back as exactly `value`.
std::string format_double(double value);

}  // namespace lognls
