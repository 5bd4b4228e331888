#include "lognls/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lognls/errors.hpp"

namespace lognls {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

Grid1D::Grid1D(double x_min, double x_max, std::size_t n_points)
    : x_min_(x_min), x_max_(x_max), n_(n_points), dx_(0.0) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min)) {
    throw ConfigError("grid: x_max must exceed x_min (got x_min=" + std::to_string(x_min) +
                      ", x_max=" + std::to_string(x_max) + ")");
  }
  if (n_points < 16 || !is_power_of_two(n_points)) {
    throw ConfigError("grid: n_points must be a power of two >= 16 (got " +
                      std::to_string(n_points) + ")");
  }
  dx_ = (x_max - x_min) / static_cast<double>(n_points);
}

double Grid1D::dk() const { return 2.0 * std::numbers::pi / length(); }

double Grid1D::wavenumber(std::size_t j) const {
  const auto n = static_cast<long>(n_);
  const auto i = static_cast<long>(j);
  const long m = i < n / 2 ? i : i - n;
  return dk() * static_cast<double>(m);
}

std::vector<double> Grid1D::positions() const {
  std::vector<double> xs(n_);
  for (std::size_t j = 0; j < n_; ++j) xs[j] = x(j);
  return xs;
}

std::vector<double> Grid1D::wavenumbers() const {
  std::vector<double> ks(n_);
  for (std::size_t j = 0; j < n_; ++j) ks[j] = wavenumber(j);
  return ks;
}

long Grid1D::bin_of(double k, double rel_tol) const {
  const double m = k / dk();
  const double r = std::round(m);
  if (std::abs(m - r) > rel_tol * std::max(1.0, std::abs(m))) return -1;
  const auto n = static_cast<long>(n_);
  const auto mi = static_cast<long>(r);
  if (mi >= n / 2 || mi < -n / 2) return -1;
  return mi >= 0 ? mi : mi + n;
}

Grid1D make_grid(double x_min, double x_max, std::size_t n_points) {
  return Grid1D(x_min, x_max, n_points);
}

}  // namespace lognls
