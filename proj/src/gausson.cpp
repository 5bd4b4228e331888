#include "lognls/gausson.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lognls/errors.hpp"

namespace lognls {

namespace {

constexpr double kTailThreshold = 1e-12;

void check_tail(const Grid1D& grid, double centre, double quarter_b, const char* what) {
  // Amplitude relative to the peak at the two ends of the periodic box.
  for (double xb : {grid.x_min(), grid.x_max()}) {
    const double xi = xb - centre;
    if (std::exp(-quarter_b * xi * xi) > kTailThreshold) {
      throw BoxTooSmallError(std::string(what) + ": box [" + std::to_string(grid.x_min()) + ", " +
                             std::to_string(grid.x_max()) +
                             ") truncates the packet tail (centre " + std::to_string(centre) +
                             ")");
    }
  }
}

}  // namespace

double GaussonParams::peak_density() const { return c * c * std::exp(2.0 * a / B); }

double GaussonParams::width() const { return 1.0 / std::sqrt(B); }

double GaussonParams::profile(double xi) const {
  const double s = xi + d;
  return std::exp(a / B) * std::exp(-0.25 * B * s * s);
}

GaussonParams coefficients_from_physics(const PhysicalParams& params, double k, double omega,
                                        double c, double d) {
  if (!(params.b > 0.0)) throw DomainError("gausson: b must be positive (no gausson at b = 0)");
  if (!(c > 0.0)) throw DomainError("gausson: amplitude c must be positive");
  const double hbar = params.hbar;
  const double m = params.mass;
  GaussonParams gp;
  gp.c = c;
  gp.k = k;
  gp.omega = omega;
  gp.d = d;
  gp.v = hbar * k / m;
  gp.A = (2.0 * m / hbar) * omega - k * k + (2.0 * m / (hbar * hbar)) * params.b * std::log(c * c);
  gp.B = 4.0 * m * params.b / (hbar * hbar);
  gp.a = gp.B / 2.0 - gp.A;
  gp.alpha = 2.0 * params.b / (hbar * hbar);
  return gp;
}

GaussonParams solve_omega_for_normalization(const PhysicalParams& params, double k, double c,
                                            double d) {
  if (!(params.b > 0.0)) throw DomainError("gausson: b must be positive (no gausson at b = 0)");
  if (!(c > 0.0)) throw DomainError("gausson: amplitude c must be positive");
  const double hbar = params.hbar;
  const double m = params.mass;
  const double B = 4.0 * m * params.b / (hbar * hbar);
  const double a = 0.25 * B * std::log(B / (2.0 * std::numbers::pi * std::pow(c, 4)));
  const double A = B / 2.0 - a;
  // Invert A = (2m/hbar) omega - k^2 + (2m/hbar^2) b ln c^2 for omega.
  const double omega =
      (hbar / (2.0 * m)) * (A + k * k - (2.0 * m / (hbar * hbar)) * params.b * std::log(c * c));
  GaussonParams gp = coefficients_from_physics(params, k, omega, c, d);
  // Keep the exact a rather than the round-tripped B/2 - A.
  gp.a = a;
  gp.A = A;
  return gp;
}

WaveField sample_gausson(const GaussonParams& gp, const Grid1D& grid, double t) {
  const double centre = gp.v * t - gp.d;
  check_tail(grid, centre, 0.25 * gp.B, "sample_gausson");
  std::vector<cplx> values(grid.size());
  const double amp = gp.c * std::exp(gp.a / gp.B);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.x(j);
    const double xi = x - centre;
    const double envelope = amp * std::exp(-0.25 * gp.B * xi * xi);
    values[j] = std::polar(envelope, gp.k * x - gp.omega * t);
  }
  return WaveField(grid, std::move(values), t);
}

double delta_m_density(double mass, double alpha, double xi) {
  if (!(mass > 0.0) || !(alpha > 0.0)) {
    throw DomainError("delta_m_density: mass and alpha must be positive");
  }
  return std::sqrt(mass * alpha / std::numbers::pi) * std::exp(-alpha * mass * xi * xi);
}

std::pair<WaveField, double> plane_wave(const Grid1D& grid, double k,
                                        const PhysicalParams& params) {
  if (grid.bin_of(k) < 0) {
    throw ConfigError("plane_wave: k = " + std::to_string(k) +
                      " is not on the grid's wavenumber ladder");
  }
  const double amp = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  std::vector<cplx> values(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) values[j] = std::polar(amp, k * grid.x(j));
  const double hbar = params.hbar;
  const double omega =
      (hbar * hbar * k * k / (2.0 * params.mass) + params.b * std::log(2.0 * std::numbers::pi)) /
      hbar;
  return {WaveField(grid, std::move(values), 0.0), omega};
}

WaveField free_gaussian_packet(const Grid1D& grid, const PhysicalParams& params, double sigma0,
                               double x0, double k, double t) {
  if (!(sigma0 > 0.0)) throw DomainError("free_gaussian_packet: sigma0 must be positive");
  const double hbar = params.hbar;
  const double m = params.mass;
  const double v = hbar * k / m;
  const double s2 = sigma0 * sigma0;
  const cplx spread(1.0, hbar * t / (2.0 * m * s2));
  // Current density variance sigma0^2 |spread|^2 sets the tail check.
  check_tail(grid, x0 + v * t, 0.25 / (s2 * std::norm(spread)), "free_gaussian_packet");
  const cplx prefactor = std::pow(2.0 * std::numbers::pi * s2, -0.25) / std::sqrt(spread);
  const double carrier_freq = hbar * k * k / (2.0 * m);
  std::vector<cplx> values(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.x(j);
    const double xi = x - x0 - v * t;
    const cplx exponent = -xi * xi / (4.0 * s2 * spread) + cplx(0.0, k * x - carrier_freq * t);
    values[j] = prefactor * std::exp(exponent);
  }
  return WaveField(grid, std::move(values), t);
}

}  // namespace lognls
