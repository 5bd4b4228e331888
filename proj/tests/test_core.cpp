#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lognls/errors.hpp"
#include "lognls/fft.hpp"
#include "lognls/gausson.hpp"
#include "lognls/grid.hpp"
#include "lognls/observables.hpp"
#include "lognls/physical_params.hpp"
#include "lognls/spectral.hpp"
#include "oracles.hpp"

using namespace lognls;
using doctest::Approx;

namespace {

const double pi = std::numbers::pi;

WaveField gaussian_field(const Grid1D& g, double beta, double x0 = 0.0) {
  std::vector<cplx> v(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) v[j] = std::exp(-beta * (g.x(j) - x0) * (g.x(j) - x0));
  return WaveField(g, v);
}

double l2(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace

TEST_SUITE("core-model") {
  TEST_CASE("grid spacing and wavenumber ladder") {
    const Grid1D g = make_grid(0.0, 2.0 * pi, 16);
    CHECK(g.dx() == Approx(0.3927).epsilon(1e-4));
    CHECK(g.x(3) == Approx(3.0 * g.dx()));
    CHECK(make_grid(-20.0, 20.0, 1024).dk() == Approx(0.15708).epsilon(1e-5));

    const auto ks = g.wavenumbers();
    CHECK(ks[0] == 0.0);
    CHECK(ks[1] == Approx(1.0));
    CHECK(ks[7] == Approx(7.0));
    CHECK(ks[8] == Approx(-8.0));
    CHECK(ks[15] == Approx(-1.0));
    CHECK(g.bin_of(3.0) == 3);
    CHECK(g.bin_of(-2.0) == 14);
    CHECK(g.bin_of(0.5) == -1);
    CHECK(g.bin_of(8.0) == -1);
  }

  TEST_CASE("grid rejects bad input") {
    CHECK_THROWS_AS(make_grid(0.0, 1.0, 17), ConfigError);
    CHECK_THROWS_AS(make_grid(0.0, 1.0, 8), ConfigError);
    CHECK_THROWS_AS(make_grid(1.0, 1.0, 16), ConfigError);
    CHECK_THROWS_AS(make_grid(2.0, -1.0, 16), ConfigError);
    CHECK(make_grid(0.0, 1.0, 32) == make_grid(0.0, 1.0, 32));
  }

  TEST_CASE("physical parameters are validated") {
    CHECK_NOTHROW(validate(PhysicalParams{}, 16));
    CHECK_THROWS_AS(validate(PhysicalParams{0.0, 1.0, 0.5, {}}, 16), ConfigError);
    CHECK_THROWS_AS(validate(PhysicalParams{1.0, -1.0, 0.5, {}}, 16), ConfigError);
    CHECK_THROWS_AS(validate(PhysicalParams{1.0, 1.0, -1.0, {}}, 16), ConfigError);
    CHECK_THROWS_AS(validate(PhysicalParams{1.0, 1.0, 0.5, std::vector<double>(15, 0.0)}, 16),
                    ConfigError);
    std::vector<double> v(16, 0.0);
    v[3] = std::nan("");
    CHECK_THROWS_AS(validate(PhysicalParams{1.0, 1.0, 0.5, v}, 16), ConfigError);
  }

  TEST_CASE("wave field rejects wrong size and non-finite samples") {
    const Grid1D g = make_grid(0.0, 1.0, 16);
    CHECK_THROWS_AS(WaveField(g, std::vector<cplx>(15)), DomainError);
    std::vector<cplx> v(16);
    v[2] = cplx(std::numeric_limits<double>::infinity(), 0.0);
    CHECK_THROWS_AS(WaveField(g, v), DomainError);
    CHECK(WaveField(g).size() == 16);
  }

  TEST_CASE("FFT matches the naive DFT oracle") {
    for (std::size_t n : {16u, 64u, 256u}) {
      const auto f = oracle::random_field(n, 7 + static_cast<unsigned>(n));
      const Grid1D g = make_grid(-1.0, 1.0, n);
      const auto fast = dft_forward(WaveField(g, f));
      const auto slow = oracle::naive_dft(f);
      CHECK(oracle::max_abs_diff(fast, slow) <= 1e-12 * l2(slow));
    }
  }

  TEST_CASE("DFT of a constant and of a single mode") {
    const Grid1D g = make_grid(0.0, 2.0 * pi, 32);
    const auto c = dft_forward(WaveField(g, std::vector<cplx>(32, cplx(2.0, 0.0))));
    CHECK(std::abs(c[0] - cplx(64.0, 0.0)) < 1e-12);
    for (std::size_t m = 1; m < 32; ++m) CHECK(std::abs(c[m]) < 1e-12);

    std::vector<cplx> mode(32);
    for (std::size_t j = 0; j < 32; ++j) mode[j] = std::polar(1.0, 5.0 * g.x(j));
    const auto s = dft_forward(WaveField(g, mode));
    for (std::size_t m = 0; m < 32; ++m) {
      if (m == 5) {
        CHECK(std::abs(s[m]) == Approx(32.0));
      } else {
        CHECK(std::abs(s[m]) < 1e-11);
      }
    }
  }

  TEST_CASE("DFT round trip and Parseval on random fields") {
    for (unsigned seed = 1; seed <= 5; ++seed) {
      const Grid1D g = make_grid(-3.0, 5.0, 512);
      const WaveField f(g, oracle::random_field(512, seed));
      const auto spectrum = dft_forward(f);
      const WaveField back = dft_inverse(spectrum, g);
      CHECK(l2_distance(f, back) <= 1e-12 * std::sqrt(total_norm(f)));
      const double spatial = l2(f.values);
      const double spectral = l2(spectrum) / std::sqrt(512.0);
      CHECK(std::abs(spatial - spectral) <= 1e-12 * spatial);
    }
  }

  TEST_CASE("spectral derivatives of a Gaussian match the closed form") {
    const Grid1D g = make_grid(-20.0, 20.0, 512);
    const oracle::Gaussian gauss{0.7};
    const WaveField f = gaussian_field(g, gauss.beta);
    const auto d1 = spectral_derivative(f.values, g, 1);
    const auto d2 = spectral_derivative(f.values, g, 2);
    const auto d3 = spectral_derivative(f.values, g, 3);
    double e1 = 0.0, e2 = 0.0, e3 = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      e1 = std::max(e1, std::abs(d1[j] - gauss.d1(g.x(j))));
      e2 = std::max(e2, std::abs(d2[j] - gauss.d2(g.x(j))));
      e3 = std::max(e3, std::abs(d3[j] - gauss.d3(g.x(j))));
    }
    CHECK(e1 < 1e-12);
    CHECK(e2 < 1e-11);
    CHECK(e3 < 1e-10);

    std::vector<double> real(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) real[j] = gauss.value(g.x(j));
    const auto r1 = spectral_derivative(std::span<const double>(real), g, 1);
    for (std::size_t j = 0; j < g.size(); ++j) CHECK(r1[j] == Approx(d1[j].real()).epsilon(1e-9));
  }

  TEST_CASE("spectral smoothing preserves the mean and damps short waves") {
    const Grid1D g = make_grid(0.0, 2.0 * pi, 64);
    std::vector<double> v(64);
    for (std::size_t j = 0; j < 64; ++j) v[j] = 1.0 + std::cos(20.0 * g.x(j));
    const auto s = spectral_smooth(v, g, 0.2);
    const double damp = std::exp(-0.5 * 4.0 * 4.0);
    for (std::size_t j = 0; j < 64; ++j) CHECK(s[j] == Approx(1.0 + damp * std::cos(20.0 * g.x(j))));
    const auto same = spectral_smooth(v, g, 0.0);
    for (std::size_t j = 0; j < 64; ++j) CHECK(std::abs(same[j] - v[j]) < 1e-14);
  }

  TEST_CASE("total norm examples") {
    const Grid1D g = make_grid(-20.0 * pi, 20.0 * pi, 1024);
    const PhysicalParams p;
    CHECK(total_norm(sample_gausson(solve_omega_for_normalization(p, 0.0), g, 0.0)) ==
          Approx(1.0).epsilon(1e-10));
    CHECK(total_norm(WaveField(g)) == 0.0);
    const Grid1D box = make_grid(0.0, 2.0 * pi, 64);
    CHECK(total_norm(WaveField(box, std::vector<cplx>(64, cplx(1.0 / std::sqrt(2.0 * pi), 0.0)))) ==
          Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("total norm is invariant under a global phase") {
    const Grid1D g = make_grid(-4.0, 4.0, 128);
    auto v = oracle::random_field(128, 42);
    const double n0 = total_norm(WaveField(g, v));
    for (double theta : {0.3, 1.7, -2.9}) {
      auto w = v;
      for (auto& z : w) z *= std::polar(1.0, theta);
      CHECK(total_norm(WaveField(g, w)) == Approx(n0).epsilon(1e-15));
    }
  }

  TEST_CASE("energy of a plane wave and of the zero field") {
    const double len = 2.0 * pi * 3.0;
    const Grid1D g = make_grid(0.0, len, 128);
    PhysicalParams p;
    p.b = 0.0;
    for (double k : {0.0, 1.0 / 3.0, 2.0}) {
      std::vector<cplx> v(128);
      for (std::size_t j = 0; j < 128; ++j) v[j] = std::polar(1.0 / std::sqrt(len), k * g.x(j));
      CHECK(energy(WaveField(g, v), p) == Approx(k * k / 2.0).epsilon(1e-12));
    }
    p.b = 0.5;
    CHECK(energy(WaveField(g), p) == 0.0);
  }

  TEST_CASE("gausson energy agrees with a quadrature oracle and is stable under refinement") {
    const PhysicalParams p;
    const GaussonParams gp = solve_omega_for_normalization(p, 0.0);
    // Closed-form integrand: |psi'|^2/2 - b |psi|^2 (ln |psi|^2 - 1).
    auto integrand = [&](double x) {
      const double rho = gp.peak_density() * std::exp(-gp.B / 2.0 * x * x);
      const double drho_amp = -gp.B / 2.0 * x;  // (sqrt rho)' / sqrt rho
      return 0.5 * rho * drho_amp * drho_amp - p.b * rho * (std::log(rho) - 1.0);
    };
    const double reference = oracle::simpson_richardson(integrand, -15.0, 15.0, 2000);
    double previous = 0.0;
    for (std::size_t n : {512u, 1024u, 2048u}) {
      const Grid1D g = make_grid(-20.0 * pi, 20.0 * pi, n);
      const double e = energy(sample_gausson(gp, g, 0.0), p);
      CHECK(e == Approx(reference).epsilon(1e-6));
      if (previous != 0.0) CHECK(e == Approx(previous).epsilon(1e-6));
      previous = e;
    }
  }

  TEST_CASE("moments of the delta_m density") {
    const Grid1D g = make_grid(-20.0, 20.0, 1024);
    for (auto [m, expected] : {std::pair{1.0, 0.5}, std::pair{4.0, 0.125}}) {
      std::vector<cplx> v(g.size());
      for (std::size_t j = 0; j < g.size(); ++j) v[j] = std::sqrt(delta_m_density(m, 1.0, g.x(j)));
      const Moments mo = moments(WaveField(g, v));
      CHECK(mo.variance == Approx(expected).epsilon(1e-12));
      CHECK(std::abs(mo.mean) < 1e-12);
    }
  }

  TEST_CASE("mean of a symmetric field sits at its centre") {
    const Grid1D g = make_grid(-20.0, 20.0, 1024);
    const double x0 = 1.5 + 2.0 * g.dx();
    CHECK(moments(gaussian_field(g, 0.3, x0)).mean == Approx(x0).epsilon(1e-10));
    CHECK_THROWS_AS(moments(WaveField(g)), DomainError);
  }

  TEST_CASE("gausson variance converges to hbar^2/(4 b m) under refinement") {
    PhysicalParams p;
    p.mass = 3.0;
    const GaussonParams gp = solve_omega_for_normalization(p, 0.0);
    const double expected = p.hbar * p.hbar / (4.0 * p.b * p.mass);
    // The rectangle rule on a periodic Gaussian converges faster than any power,
    // so each halving of dx must cut the error by at least the dx^2 factor.
    double previous = 1.0;
    for (std::size_t n : {16u, 32u, 64u, 128u}) {
      const Grid1D g = make_grid(-10.0, 10.0, n);
      const double err = std::abs(moments(sample_gausson(gp, g, 0.0)).variance - expected);
      CHECK((err <= previous / 4.0 || err < 1e-15));
      previous = err;
    }
    CHECK(previous < 1e-14);
  }

  TEST_CASE("l2 distance and peak position") {
    const Grid1D g = make_grid(-10.0, 10.0, 256);
    const WaveField a = gaussian_field(g, 1.0, 0.3);
    CHECK(l2_distance(a, a) == 0.0);
    CHECK(peak_position(a) == Approx(0.3).epsilon(1e-3));
    CHECK_THROWS_AS(l2_distance(a, WaveField(make_grid(-10.0, 10.0, 128))), DomainError);
    std::vector<cplx> twice(a.values);
    for (auto& z : twice) z *= 2.0;
    CHECK(l2_distance(a, WaveField(g, twice)) == Approx(std::sqrt(total_norm(a))));
  }
}
