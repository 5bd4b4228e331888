#pragma once

#include <cstddef>
#include <vector>

namespace lognls {

/// Uniform periodic grid on [x_min, x_max). The point x_max is identified with x_min.
class Grid1D {
 public:
  /// Throws ConfigError unless x_max > x_min and n_points is a power of two >= 16.
  Grid1D(double x_min, double x_max, std::size_t n_points);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  std::size_t size() const { return n_; }
  double length() const { return x_max_ - x_min_; }
  double dx() const { return dx_; }
  double dk() const;

  double x(std::size_t j) const { return x_min_ + static_cast<double>(j) * dx_; }

  /// Wavenumber of DFT bin j in standard ordering: 0, dk, ..., -(n/2) dk, ..., -dk.
  double wavenumber(std::size_t j) const;

  std::vector<double> positions() const;
  std::vector<double> wavenumbers() const;

  /// Index of the bin carrying wavenumber k, or -1 when k is not on the ladder.
  long bin_of(double k, double rel_tol = 1e-9) const;

  bool operator==(const Grid1D&) const = default;

 private:
  double x_min_;
  double x_max_;
  std::size_t n_;
  double dx_;
};

Grid1D make_grid(double x_min, double x_max, std::size_t n_points);

}  // namespace lognls
