#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lognls/errors.hpp"
#include "lognls/evolution.hpp"
#include "lognls/gausson.hpp"
#include "lognls/madelung.hpp"
#include "oracles.hpp"

using namespace lognls;
using doctest::Approx;

namespace {

const double pi = std::numbers::pi;
const Grid1D wide = make_grid(-20.0 * pi, 20.0 * pi, 1024);
const PhysicalParams unit{1.0, 1.0, 0.5, {}};

WaveField plane(const Grid1D& g, double k, double omega, double t) {
  std::vector<cplx> v(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    v[j] = std::polar(1.0 / std::sqrt(2.0 * pi), k * g.x(j) - omega * t);
  }
  return WaveField(g, v, t);
}

}  // namespace

TEST_SUITE("madelung-hydro") {
  TEST_CASE("decompose a plane wave") {
    const Grid1D g = make_grid(0.0, 2.0 * pi * 4.0, 256);
    const HydroFields h = decompose(plane(g, 1.5, 0.0, 0.0), unit);
    for (std::size_t j = 0; j < g.size(); ++j) {
      CHECK(h.mask[j] == 1);
      CHECK(h.density[j] == Approx(1.0 / (2.0 * pi)).epsilon(1e-14));
      CHECK(h.velocity[j] == Approx(1.5).epsilon(1e-12));
      CHECK(std::abs(h.bohm_potential[j]) < 1e-10);
    }
    // Unwrapped action grows linearly at hbar k per unit length.
    CHECK(h.action.back() - h.action.front() == Approx(1.5 * (g.x(255) - g.x(0))).epsilon(1e-12));
  }

  TEST_CASE("decompose gaussons at rest and moving") {
    const WaveField rest = sample_gausson(solve_omega_for_normalization(unit, 0.0), wide, 0.0);
    const HydroFields h0 = decompose(rest, unit);
    for (std::size_t j = 0; j < wide.size(); ++j) {
      CHECK(h0.action[j] == 0.0);
      CHECK(std::abs(h0.velocity[j]) <= 1e-11);
      CHECK(h0.density[j] >= 0.0);
      CHECK(std::abs(h0.density[j] - std::norm(rest.values[j])) <= 1e-12);
    }
    PhysicalParams heavy = unit;
    heavy.mass = 2.0;
    const WaveField moving = sample_gausson(solve_omega_for_normalization(heavy, 1.2), wide, 0.5);
    const HydroFields h1 = decompose(moving, heavy);
    for (std::size_t j = 0; j < wide.size(); ++j) {
      if (h1.mask[j]) CHECK(h1.velocity[j] == Approx(0.6).epsilon(1e-9));
    }
  }

  TEST_CASE("velocity matches the derivative of the unwrapped action") {
    const WaveField moving = sample_gausson(solve_omega_for_normalization(unit, 2.0), wide, 1.0);
    const HydroFields h = decompose(moving, unit);
    for (std::size_t j = 1; j + 1 < wide.size(); ++j) {
      if (!(h.mask[j - 1] && h.mask[j] && h.mask[j + 1])) continue;
      const double fd = (h.action[j + 1] - h.action[j - 1]) / (2.0 * wide.dx()) / unit.mass;
      CHECK(fd == Approx(h.velocity[j]).epsilon(1e-9));
    }
  }

  TEST_CASE("recompose inverts decompose up to a global phase") {
    const GaussonParams gp = solve_omega_for_normalization(unit, 0.7, 1.0, 3.0);
    const WaveField f = sample_gausson(gp, wide, 2.0);
    const HydroFields h = decompose(f, unit);
    const WaveField r = recompose(h, wide, unit, f.time);
    std::size_t ref = 0;
    while (!h.mask[ref]) ++ref;
    const cplx phase = f.values[ref] / r.values[ref] / std::abs(f.values[ref] / r.values[ref]);
    for (std::size_t j = 0; j < wide.size(); ++j) {
      if (h.mask[j]) CHECK(std::abs(f.values[j] - phase * r.values[j]) <= 1e-10);
    }
  }

  TEST_CASE("decompose preconditions") {
    CHECK_THROWS_AS(decompose(WaveField(wide), unit), DomainError);
    const WaveField f = plane(make_grid(0.0, 2.0 * pi, 32), 1.0, 0.0, 0.0);
    CHECK_THROWS_AS(decompose(f, unit, 0.0), DomainError);
    CHECK_THROWS_AS(decompose(f, unit, 1e-2), DomainError);
    CHECK_NOTHROW(decompose(f, unit, 1e-3));
  }

  TEST_CASE("Bohm potential of a Gaussian density") {
    const Grid1D g = make_grid(-20.0, 20.0, 1024);
    std::vector<double> n(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) n[j] = std::exp(-g.x(j) * g.x(j));
    const std::vector<std::uint8_t> mask(g.size(), 1);
    const auto vq = bohm_potential(n, g, unit, mask);
    const std::size_t centre = 512;  // x = 0
    const std::size_t at_one = centre + static_cast<std::size_t>(std::lround(1.0 / g.dx()));
    REQUIRE(g.x(centre) == 0.0);
    CHECK(vq[centre] == Approx(0.5).epsilon(1e-10));
    // Oracle: V_q = -(1/2)(x^2 - 1) for n = exp(-x^2), evaluated where n is well resolved.
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (std::abs(g.x(j)) < 4.0) CHECK(vq[j] == Approx(-0.5 * (g.x(j) * g.x(j) - 1.0)).epsilon(1e-8));
    }
    CHECK(vq[at_one] == Approx(-0.5 * (g.x(at_one) * g.x(at_one) - 1.0)).epsilon(1e-8));

    const std::vector<double> flat(g.size(), 0.3);
    for (double v : bohm_potential(flat, g, unit, mask)) CHECK(std::abs(v) < 1e-12);

    std::vector<std::uint8_t> partial(g.size(), 0);
    partial[centre] = 1;
    const auto masked = bohm_potential(n, g, unit, partial);
    CHECK(masked[centre] == Approx(0.5).epsilon(1e-10));
    CHECK(masked[0] == 0.0);
  }

  TEST_CASE("pressure examples") {
    const std::vector<double> n = {2.0, 0.0, 0.25};
    const auto p = pressure(n, 0.5);
    CHECK(p[0] == -1.0);
    CHECK(p[1] == 0.0);
    CHECK(p[2] == -0.125);
    for (double v : pressure(n, 0.0)) CHECK(v == 0.0);
    const auto rho = density(sample_gausson(solve_omega_for_normalization(unit, 0.0), wide, 0.0));
    const auto pg = pressure(rho, 0.5);
    for (std::size_t j = 0; j < rho.size(); ++j) CHECK(pg[j] == -0.5 * rho[j]);
  }

  TEST_CASE("enthalpy values") {
    const Grid1D g = make_grid(0.0, 2.0 * pi, 64);
    const auto one = enthalpy_term(WaveField(g, std::vector<cplx>(64, cplx(0.6, 0.8))), 0.7);
    for (double v : one.value) CHECK(std::abs(v) < 1e-15);
    const auto pw = enthalpy_term(plane(g, 0.0, 0.0, 0.0), 1.0);
    for (double v : pw.value) CHECK(v == Approx(1.83788).epsilon(1e-5));
  }

  TEST_CASE("enthalpy gradient identity with a conservative floor") {
    // At floor 1e-6 the p'/n route is well above rounding.
    for (double k : {0.0, 1.0}) {
      const WaveField f = sample_gausson(solve_omega_for_normalization(unit, k), wide, 0.0);
      CHECK(enthalpy_term(f, unit.b, 1e-6).gradient_mismatch <= 1e-9);
    }
  }

  TEST_CASE("continuity residual") {
    for (double k : {0.0, 1.0, -2.0}) {
      const GaussonParams gp = solve_omega_for_normalization(unit, k);
      const double r = continuity_residual(sample_gausson(gp, wide, 0.3), sample_gausson(gp, wide, 0.3 + 1e-4), unit);
      CHECK(r <= 1e-6);
    }
    const Grid1D g = make_grid(0.0, 2.0 * pi * 4.0, 256);
    const double omega = 0.5 + std::log(2.0 * pi);
    CHECK(continuity_residual(plane(g, 1.0, omega, 0.0), plane(g, 1.0, omega, 1e-3), unit) <= 1e-10);

    // Negative control: density scaled by (1 + 0.1 x) in the later snapshot.
    const GaussonParams gp = solve_omega_for_normalization(unit, 1.0);
    WaveField later = sample_gausson(gp, wide, 1e-4);
    for (std::size_t j = 0; j < wide.size(); ++j) later.values[j] *= std::sqrt(std::abs(1.0 + 0.1 * wide.x(j)));
    CHECK(continuity_residual(sample_gausson(gp, wide, 0.0), later, unit) > 1e-2);
  }

  TEST_CASE("Euler residual") {
    for (double k : {0.0, 1.0}) {
      const GaussonParams gp = solve_omega_for_normalization(unit, k);
      CHECK(euler_residual(sample_gausson(gp, wide, 0.0), sample_gausson(gp, wide, 1e-4), unit) <= 1e-5);
    }
    const Grid1D g = make_grid(0.0, 2.0 * pi * 4.0, 256);
    const double omega = 0.5 + std::log(2.0 * pi);
    CHECK(euler_residual(plane(g, 1.0, omega, 0.0), plane(g, 1.0, omega, 1e-3), unit) <= 1e-8);

    // Negative control: the gausson is a solution only with its own b.
    const GaussonParams gp = solve_omega_for_normalization(unit, 1.0);
    PhysicalParams linear = unit;
    linear.b = 0.0;
    CHECK(euler_residual(sample_gausson(gp, wide, 0.0), sample_gausson(gp, wide, 1e-4), linear) > 1e-2);
  }

  TEST_CASE("residual preconditions") {
    const GaussonParams gp = solve_omega_for_normalization(unit, 1.0);
    const WaveField a = sample_gausson(gp, wide, 0.0);
    CHECK_THROWS_AS(continuity_residual(a, a, unit), DomainError);
    CHECK_THROWS_AS(euler_residual(a, a, unit), DomainError);
    const WaveField other = sample_gausson(gp, make_grid(-20.0 * pi, 20.0 * pi, 512), 1e-4);
    CHECK_THROWS_AS(continuity_residual(a, other, unit), DomainError);
  }

  TEST_CASE("continuity residual of evolved fields converges at second order") {
    // dt and dx refined jointly; the gausson stays resolved on every grid.
    const GaussonParams gp = solve_omega_for_normalization(unit, 1.0);
    double previous = 0.0;
    for (int level = 0; level < 3; ++level) {
      const double dt = 4e-3 / std::pow(2.0, level);
      const Grid1D g = make_grid(-20.0, 20.0, 256u << level);
      EvolveConfig ev;
      ev.dt = dt;
      ev.n_steps = 1;
      ev.record_every = 1;
      const Trajectory t = split_step(sample_gausson(gp, g, 0.0), unit, ev);
      const double r = continuity_residual(t.snapshots[0], t.snapshots[1], unit);
      if (level > 0) CHECK(previous / r == Approx(4.0).epsilon(0.15));
      previous = r;
    }
  }
}
