#include "lognls/spectral.hpp"

#include <cmath>

#include "lognls/errors.hpp"

namespace lognls {

std::vector<cplx> spectral_derivative(std::span<const cplx> values, const Grid1D& grid, int order,
                                      FftPlan& plan) {
  if (values.size() != grid.size() || plan.size() != grid.size()) {
    throw DomainError("spectral_derivative: size mismatch");
  }
  if (order < 0) throw DomainError("spectral_derivative: negative order");
  const std::size_t n = grid.size();
  std::vector<cplx> out(n);
  plan.forward(values, out);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (order % 2 == 1 && j == n / 2) {
      out[j] = 0.0;
      continue;
    }
    const cplx ik(0.0, grid.wavenumber(j));
    cplx factor = scale;
    for (int p = 0; p < order; ++p) factor *= ik;
    out[j] *= factor;
  }
  plan.backward(out, out);
  return out;
}

std::vector<cplx> spectral_derivative(std::span<const cplx> values, const Grid1D& grid,
                                      int order) {
  FftPlan plan(grid.size());
  return spectral_derivative(values, grid, order, plan);
}

std::vector<double> spectral_derivative(std::span<const double> values, const Grid1D& grid,
                                        int order, FftPlan& plan) {
  std::vector<cplx> z(values.begin(), values.end());
  const auto d = spectral_derivative(z, grid, order, plan);
  std::vector<double> out(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) out[j] = d[j].real();
  return out;
}

std::vector<double> spectral_derivative(std::span<const double> values, const Grid1D& grid,
                                        int order) {
  FftPlan plan(grid.size());
  return spectral_derivative(values, grid, order, plan);
}

std::vector<double> spectral_smooth(std::span<const double> values, const Grid1D& grid,
                                    double scale) {
  if (values.size() != grid.size()) throw DomainError("spectral_smooth: size mismatch");
  const std::size_t n = grid.size();
  FftPlan plan(n);
  std::vector<cplx> z(values.begin(), values.end());
  plan.forward(z, z);
  for (std::size_t j = 0; j < n; ++j) {
    const double ks = grid.wavenumber(j) * scale;
    z[j] *= std::exp(-0.5 * ks * ks) / static_cast<double>(n);
  }
  plan.backward(z, z);
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = z[j].real();
  return out;
}

}  // namespace lognls
