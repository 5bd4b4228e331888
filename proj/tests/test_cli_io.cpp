#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "lognls/cli.hpp"
#include "lognls/config.hpp"
#include "lognls/errors.hpp"
#include "lognls/gausson.hpp"
#include "lognls/output.hpp"

using namespace lognls;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("lognls_cli_io_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

// Line number carried by a ConfigError, or 0.
std::size_t error_line(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    const auto pos = msg.find("line ");
    if (pos == std::string::npos) return 0;
    return std::stoul(msg.substr(pos + 5));
  }
  return 0;
}

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

}  // namespace

TEST_SUITE("cli-io") {
  TEST_CASE("minimal config takes the defaults") {
    const RunConfig c = parse_config("[scenario]\nname = free_gausson\n");
    CHECK(c.physics.hbar == 1.0);
    CHECK(c.physics.mass == 1.0);
    CHECK(c.physics.b == 0.5);
    CHECK(c.grid.x_min == doctest::Approx(-62.83).epsilon(1e-4));
    CHECK(c.grid.x_max == doctest::Approx(62.83).epsilon(1e-4));
    CHECK(c.grid.n_points == 1024);
    CHECK(c.evolve.dt == 1e-3);
    CHECK(c.scenario.name == "free_gausson");
  }

  TEST_CASE("invalid values are rejected") {
    CHECK_THROWS_AS(parse_config("[physics]\nb = -1\n[scenario]\nname = free_gausson\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[grid]\nn_points = 1000\n[scenario]\nname = free_gausson\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[evolve]\ndt = 0\n[scenario]\nname = free_gausson\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[scenario]\nname = bogus\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[physics]\nb = 0.5\n"), ConfigError);
  }

  TEST_CASE("syntax errors carry their line number") {
    CHECK(error_line("[scenario]\nname = free_gausson\nwidth = 3\n") == 3);
    CHECK(error_line("[scenario]\nname = free_gausson\n\nname = plane_wave\n") == 4);
    CHECK(error_line("# c\n[physics]\nb = 0.5x\n[scenario]\nname = free_gausson\n") == 3);
    CHECK(error_line("[nowhere]\n") == 1);
    CHECK(error_line("[physics]\nb\n") == 2);
    CHECK(error_line("b = 1\n") == 1);
    CHECK(error_line("[grid]\nn_points = -4\n[scenario]\nname = free_gausson\n") == 2);
  }

  TEST_CASE("render and parse round trip") {
    RunConfig c = parse_config("[scenario]\nname = knife_edge\n");
    c.physics.b = 0.1 + 0.2;
    c.physics.hbar = 1.0 / 3.0;
    c.grid.x_min = -std::numbers::pi * 7.0;
    c.evolve.scheme = Scheme::crank_nicolson;
    c.evolve.backend = kernels::Backend::serial;
    c.evolve.cn_tol = 1e-13;
    c.scenario.aperture_edge = -1.25e-3;
    c.scenario.convergence_check = false;
    c.output.dir = "some/where";
    const std::string text = render_config(c);
    const RunConfig back = parse_config(text);
    CHECK(back == c);
    CHECK(render_config(back) == text);
  }

  TEST_CASE("manifest lists each key once") {
    const RunConfig c = parse_config("[scenario]\nname = mass_sweep\n");
    const auto lines = manifest_lines(c);
    std::set<std::string> keys;
    for (const auto& line : lines) {
      const auto key = line.substr(0, line.find(" = "));
      CHECK(keys.insert(key).second);
    }
    CHECK(keys.count("physics.b") == 1);
    CHECK(keys.count("scenario.name") == 1);
    CHECK(keys.count("output.dir") == 1);

    const fs::path dir = scratch("manifest");
    write_outputs(run_scenario(c), dir);
    const std::string manifest = slurp(dir / "manifest.txt");
    for (const auto& line : lines) {
      std::size_t hits = 0;
      for (auto p = manifest.find(line + "\n"); p != std::string::npos; p = manifest.find(line + "\n", p + 1)) {
        if (p == 0 || manifest[p - 1] == '\n') ++hits;
      }
      CHECK_MESSAGE(hits == 1, line);
    }
    CHECK(manifest.find("criterion,measured,tolerance,pass\n") != std::string::npos);
  }

  TEST_CASE("results csv reads back bit-exactly") {
    const RunConfig c = parse_config("[scenario]\nname = mass_sweep\n");
    const ScenarioReport r = run_scenario(c);
    const fs::path dir = scratch("csv");
    write_outputs(r, dir);
    std::ifstream in(dir / "results.csv");
    std::string line;
    std::getline(in, line);
    CHECK(line == "mass,sigma_measured,sigma_analytic,peak_density");
    std::size_t row = 0;
    while (std::getline(in, line)) {
      std::stringstream ss(line);
      std::string cell;
      std::size_t col = 0;
      while (std::getline(ss, cell, ',')) {
        CHECK(std::strtod(cell.c_str(), nullptr) == r.rows[row][col]);
        ++col;
      }
      CHECK(col == r.columns.size());
      ++row;
    }
    CHECK(row == r.rows.size());
  }

  TEST_CASE("format_scientific round trips awkward values") {
    for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 5e-324, 0.0}) {
      CHECK(std::strtod(format_scientific(v).c_str(), nullptr) == v);
    }
  }

  TEST_CASE("snapshot round trip and grid mismatch") {
    const Grid1D grid = make_grid(-20.0, 20.0, 256);
    const GaussonParams gp = solve_omega_for_normalization(make_physical_params(PhysicsSettings{}, grid), 1.0);
    ScenarioReport r;
    r.name = "free_gausson";
    r.columns = {"t"};
    for (double t : {0.0, 0.5, 1.0}) r.rows.push_back({t});
    SnapshotSeries s{"snapshots.csv", {}};
    for (double t : {0.0, 0.5, 1.0}) s.snapshots.push_back(sample_gausson(gp, grid, t));
    r.snapshots.push_back(s);
    const fs::path dir = scratch("snap");
    write_outputs(r, dir);
    const auto back = read_snapshots(dir / "snapshots.csv", grid);
    REQUIRE(back.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(back[i].time == s.snapshots[i].time);
      CHECK(back[i].values == s.snapshots[i].values);
    }
    CHECK_THROWS_AS(read_snapshots(dir / "snapshots.csv", make_grid(-10.0, 10.0, 256)), DomainError);
    CHECK_THROWS_AS(read_snapshots(dir / "absent.csv", grid), IoError);
    spit(dir / "bad.csv", "t,x,re,im,density\n0,1,2\n");
    CHECK_THROWS_AS(read_snapshots(dir / "bad.csv", grid), IoError);
  }

  TEST_CASE("cli exit codes") {
    const fs::path dir = scratch("exit");
    std::string text;
    CHECK(cli({"version"}, &text) == kExitOk);
    CHECK(text.find("0.1.0") != std::string::npos);
    CHECK(cli({"list-scenarios"}, &text) == kExitOk);
    CHECK(text.find("knife_edge") != std::string::npos);
    CHECK(cli({"frobnicate"}) == kExitUsage);
    CHECK(cli({"run", "--scenario", "mass_sweep"}) == kExitUsage);
    CHECK(cli({"run", "--scenario", "mass_sweep", "--config", (dir / "none.cfg").string()}) == kExitUsage);

    spit(dir / "ok.cfg", "[scenario]\nname = mass_sweep\n");
    CHECK(cli({"run", "--scenario", "mass_sweep", "--config", (dir / "ok.cfg").string(), "--out",
               (dir / "ok").string()}) == kExitOk);
    CHECK(fs::exists(dir / "ok" / "results.csv"));
    CHECK(cli({"run", "--scenario", "nope", "--config", (dir / "ok.cfg").string()}) == kExitUsage);

    spit(dir / "blocker", "x");
    CHECK(cli({"run", "--scenario", "mass_sweep", "--config", (dir / "ok.cfg").string(), "--out",
               (dir / "blocker" / "sub").string()}) == kExitUsage);
  }

  TEST_CASE("residual command on stored snapshots") {
    const fs::path dir = scratch("residual");
    spit(dir / "run.cfg",
         "[evolve]\ndt = 1e-3\nn_steps = 20\nrecord_every = 1\n[scenario]\nname = free_gausson\n"
         "convergence_check = false\n");
    REQUIRE(cli({"run", "--scenario", "free_gausson", "--config", (dir / "run.cfg").string(), "--out",
                 (dir / "out").string()}) == kExitOk);
    spit(dir / "res.cfg", "[scenario]\nname = free_gausson\nsnapshots = " + (dir / "out" / "snapshots.csv").string() +
                              "\nresidual_time = 0.01\n");
    std::string text;
    REQUIRE(cli({"residual", "--config", (dir / "res.cfg").string()}, &text) == kExitOk);
    CHECK(text.find("t = 1e-02") != std::string::npos);
    const auto pos = text.find("pde_residual = ");
    REQUIRE(pos != std::string::npos);
    CHECK(std::strtod(text.c_str() + pos + 15, nullptr) <= 1e-5);

    spit(dir / "nosnap.cfg", "[scenario]\nname = free_gausson\n");
    CHECK(cli({"residual", "--config", (dir / "nosnap.cfg").string()}) == kExitUsage);
  }
}
