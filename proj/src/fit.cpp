#include <cmath>

#include "lognls/analysis.hpp"
#include "lognls/errors.hpp"

namespace lognls {

LineFit fit_line(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw DomainError("fit_line: length mismatch");
  if (xs.size() < 2) throw DomainError("fit_line: need at least two points");
  const double n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0)) throw DomainError("fit_line: all abscissae coincide");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return fit;
}

LineFit fit_loglog_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw DomainError("fit_loglog_slope: length mismatch");
  if (xs.size() < 3) throw DomainError("fit_loglog_slope: need at least three points");
  std::vector<double> lx(xs.size());
  std::vector<double> ly(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) {
      throw DomainError("fit_loglog_slope: entries must be positive");
    }
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
  }
  return fit_line(lx, ly);
}

}  // namespace lognls
