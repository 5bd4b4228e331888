#include <cmath>

#include "lognls/analysis.hpp"
#include "lognls/errors.hpp"

namespace lognls {

namespace {

struct Extremum {
  double x;
  double value;
};

Extremum refine(std::span<const double> y, const Grid1D& grid, std::size_t j) {
  const double left = y[j - 1];
  const double mid = y[j];
  const double right = y[j + 1];
  const double curvature = left - 2.0 * mid + right;
  if (curvature == 0.0) return {grid.x(j), mid};
  const double offset = 0.5 * (left - right) / curvature;
  return {grid.x(j) + offset * grid.dx(), mid - 0.25 * (left - right) * offset};
}

}  // namespace

std::vector<Fringe> extract_fringes(std::span<const double> intensity, const Grid1D& grid,
                                    double x_start, double search_width, std::size_t count) {
  if (intensity.size() != grid.size()) throw DomainError("extract_fringes: size mismatch");
  if (!(search_width > 0.0)) throw DomainError("extract_fringes: search width must be positive");
  const double x_stop = x_start + search_width;

  std::vector<Fringe> fringes;
  bool have_max = false;
  Fringe current;
  for (std::size_t j = 1; j + 1 < intensity.size() && fringes.size() < count; ++j) {
    const double x = grid.x(j);
    if (x <= x_start) continue;
    if (x >= x_stop) break;
    const double l = intensity[j - 1];
    const double c = intensity[j];
    const double r = intensity[j + 1];
    if (!have_max && c >= l && c > r) {
      const auto e = refine(intensity, grid, j);
      current.x_max = e.x;
      current.i_max = e.value;
      have_max = true;
    } else if (have_max && c <= l && c < r) {
      const auto e = refine(intensity, grid, j);
      current.x_min = e.x;
      current.i_min = e.value;
      fringes.push_back(current);
      have_max = false;
    }
  }
  return fringes;
}

}  // namespace lognls
