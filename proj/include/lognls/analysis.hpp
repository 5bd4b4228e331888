#pragma once

#include <span>
#include <vector>

#include "lognls/grid.hpp"

namespace lognls {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares y = slope x + intercept. Needs at least two points.
LineFit fit_line(std::span<const double> xs, std::span<const double> ys);

/// Least squares on (ln x, ln y). Throws DomainError for fewer than three points,
/// mismatched lengths or a non-positive entry. r_squared is 1 for an exactly
/// constant y (no variance to explain).
LineFit fit_loglog_slope(std::span<const double> xs, std::span<const double> ys);

/// One bright/dark fringe pair: a maximum followed by the next minimum.
struct Fringe {
  double x_max = 0.0;
  double i_max = 0.0;
  double x_min = 0.0;
  double i_min = 0.0;
  double contrast() const { return (i_max - i_min) / (i_max + i_min); }
};

/// Scans `intensity` from x_start towards x_start + search_width and returns up to
/// `count` maximum/minimum pairs. Minima before the first maximum are skipped.
/// Extrema positions and values are refined by a parabola through the discrete
/// extremum and its two neighbours.
std::vector<Fringe> extract_fringes(std::span<const double> intensity, const Grid1D& grid,
                                    double x_start, double search_width, std::size_t count);

}  // namespace lognls
