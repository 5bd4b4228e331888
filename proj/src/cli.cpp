#include "lognls/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <ostream>

#include "lognls/config.hpp"
#include "lognls/errors.hpp"
#include "lognls/evolution.hpp"
#include "lognls/output.hpp"
#include "lognls/scenarios.hpp"

namespace lognls {

namespace {

int command_run(const std::string& scenario, const std::string& config_path,
                const std::string& out_dir, std::ostream& out) {
  RunConfig cfg = load_config(config_path);
  cfg.scenario.name = scenario;
  if (!out_dir.empty()) cfg.output.dir = out_dir;
  validate(cfg);

  const ScenarioReport report = run_scenario(cfg);
  write_outputs(report, cfg.output.dir);
  for (const Verdict& v : report.verdicts) {
    out << (v.pass ? "PASS " : "FAIL ") << v.criterion << " measured=" << format_scientific(v.measured)
        << " tolerance=" << format_scientific(v.tolerance) << '\n';
  }
  out << report.name << ": " << (report.passed() ? "all verdicts passed" : "verdict failure")
      << " (outputs in " << cfg.output.dir << ")\n";
  return report.passed() ? kExitOk : kExitVerdictFailed;
}

int command_residual(const std::string& config_path, std::ostream& out) {
  const RunConfig cfg = load_config(config_path);
  if (cfg.scenario.snapshots.empty()) {
    throw ConfigError("residual: scenario.snapshots must name a snapshot CSV");
  }
  const Grid1D grid = cfg.grid.make();
  const PhysicalParams params = make_physical_params(cfg.physics, grid);
  const auto fields = read_snapshots(cfg.scenario.snapshots, grid);
  if (fields.size() < 3) throw DomainError("residual: need at least three snapshots");

  std::size_t best = 1;
  for (std::size_t i = 1; i + 1 < fields.size(); ++i) {
    if (std::abs(fields[i].time - cfg.scenario.residual_time) <
        std::abs(fields[best].time - cfg.scenario.residual_time)) {
      best = i;
    }
  }
  const double r = pde_residual(fields[best - 1], fields[best], fields[best + 1], params,
                                kDefaultDensityFloor, cfg.evolve.log_clamp);
  out << "t = " << format_scientific(fields[best].time) << '\n';
  out << "pde_residual = " << format_scientific(r) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Logarithmic nonlinear Schroedinger equation scenarios", "lognls"};
  app.require_subcommand(1);

  std::string scenario;
  std::string config_path;
  std::string out_dir;
  auto* run = app.add_subcommand("run", "Run a scenario and write results, snapshots and manifest");
  run->add_option("--scenario", scenario, "Scenario name")->required();
  run->add_option("--config", config_path, "Config file")->required();
  run->add_option("--out", out_dir, "Output directory (overrides output.dir)");

  auto* list = app.add_subcommand("list-scenarios", "Print the scenario names");

  std::string residual_config;
  auto* residual = app.add_subcommand("residual", "Equation residual of a stored snapshot");
  residual->add_option("--config", residual_config, "Config file")->required();

  auto* version = app.add_subcommand("version", "Print the version");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("lognls");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*list) {
      for (const auto& name : scenario_names()) out << name << '\n';
      return kExitOk;
    }
    if (*version) {
      out << "lognls " << kVersion << '\n';
      return kExitOk;
    }
    if (*run) return command_run(scenario, config_path, out_dir, out);
    if (*residual) return command_residual(residual_config, out);
  } catch (const NumericalBlowupError& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerdictFailed;
  } catch (const IterationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerdictFailed;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lognls
