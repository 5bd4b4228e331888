#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lognls/scenarios.hpp"
#include "lognls/wave_field.hpp"

namespace lognls {

/// Shortest scientific-notation string that reads back bit-exactly.
std::string format_scientific(double value);

/// Writes into `dir` (created if missing):
///   results.csv   header of column names, one line per row
///   <snapshots>   long format t,x,re,im,density for each snapshot series
///   manifest.txt  artifact/version/scenario lines, every config key as
///                 "section.key = value", metric lines "metric.<name> = value", then a
///                 "criterion,measured,tolerance,pass" block with one line per verdict
/// Throws IoError if the directory or a file cannot be written.
void write_outputs(const ScenarioReport& report, const std::filesystem::path& dir);

/// Reads a long-format snapshot CSV back into fields on `grid`, one per distinct t,
/// in file order. Throws IoError on unreadable or malformed files and DomainError if
/// the x column does not match the grid.
std::vector<WaveField> read_snapshots(const std::filesystem::path& path, const Grid1D& grid);

}  // namespace lognls
