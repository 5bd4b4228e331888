#include "lognls/observables.hpp"

#include <algorithm>
#include <cmath>

#include "lognls/errors.hpp"
#include "lognls/spectral.hpp"

namespace lognls {

double total_norm(const WaveField& field) {
  double s = 0.0;
  for (const cplx& z : field.values) s += std::norm(z);
  return s * field.grid.dx();
}

double energy(const WaveField& field, const PhysicalParams& params, double log_clamp) {
  validate(params, field.size());
  const auto dpsi = spectral_derivative(field.values, field.grid, 1);
  double peak = 0.0;
  for (const cplx& z : field.values) peak = std::max(peak, std::norm(z));
  const double floor = log_clamp * peak;
  const double kinetic_coeff = params.hbar * params.hbar / (2.0 * params.mass);

  double e = 0.0;
  for (std::size_t j = 0; j < field.size(); ++j) {
    const double rho = std::norm(field.values[j]);
    double term = kinetic_coeff * std::norm(dpsi[j]) + params.potential_at(j) * rho;
    if (params.b != 0.0 && rho > 0.0) {
      term -= params.b * rho * (std::log(std::max(rho, floor)) - 1.0);
    }
    e += term;
  }
  return e * field.grid.dx();
}

Moments moments(const WaveField& field) {
  double norm = 0.0;
  double first = 0.0;
  for (std::size_t j = 0; j < field.size(); ++j) {
    const double rho = std::norm(field.values[j]);
    norm += rho;
    first += field.grid.x(j) * rho;
  }
  if (!(norm > 0.0)) throw DomainError("moments: field has zero norm");
  const double mean = first / norm;
  double second = 0.0;
  for (std::size_t j = 0; j < field.size(); ++j) {
    const double d = field.grid.x(j) - mean;
    second += d * d * std::norm(field.values[j]);
  }
  return {mean, second / norm};
}

std::vector<double> density(const WaveField& field) {
  std::vector<double> rho(field.size());
  for (std::size_t j = 0; j < field.size(); ++j) rho[j] = std::norm(field.values[j]);
  return rho;
}

double l2_distance(const WaveField& a, const WaveField& b) {
  if (!(a.grid == b.grid)) throw DomainError("l2_distance: grids differ");
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += std::norm(a.values[j] - b.values[j]);
  return std::sqrt(s * a.grid.dx());
}

double peak_position(const WaveField& field) {
  const auto rho = density(field);
  const std::size_t n = rho.size();
  const auto it = std::max_element(rho.begin(), rho.end());
  const std::size_t j = static_cast<std::size_t>(it - rho.begin());
  const double left = rho[(j + n - 1) % n];
  const double mid = rho[j];
  const double right = rho[(j + 1) % n];
  const double denom = left - 2.0 * mid + right;
  double offset = 0.0;
  if (denom < 0.0) offset = 0.5 * (left - right) / denom;
  return field.grid.x(j) + offset * field.grid.dx();
}

}  // namespace lognls
