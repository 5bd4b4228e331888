#include "lognls/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "lognls/errors.hpp"
#include "lognls/scenarios.hpp"

namespace lognls {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

namespace {

// Setter failures throw this; the parser adds the line number.
struct BadValue {
  std::string message;
};

double read_double(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw BadValue{"malformed number '" + std::string(s) + "'"};
  }
  return v;
}

std::size_t read_count(std::string_view s) {
  unsigned long long v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw BadValue{"malformed non-negative integer '" + std::string(s) + "'"};
  }
  return static_cast<std::size_t>(v);
}

bool read_bool(std::string_view s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw BadValue{"expected true or false, got '" + std::string(s) + "'"};
}

std::string show(bool v) { return v ? "true" : "false"; }
std::string show(double v) { return format_double(v); }
std::string show(std::size_t v) { return std::to_string(v); }
std::string show(const std::string& v) { return v; }

void assign(double& field, std::string_view s) { field = read_double(s); }
void assign(std::size_t& field, std::string_view s) { field = read_count(s); }
void assign(bool& field, std::string_view s) { field = read_bool(s); }
void assign(std::string& field, std::string_view s) { field = std::string(s); }

std::string show(Scheme s) { return s == Scheme::split_step ? "split_step" : "crank_nicolson"; }
void assign(Scheme& field, std::string_view s) {
  if (s == "split_step") {
    field = Scheme::split_step;
  } else if (s == "crank_nicolson") {
    field = Scheme::crank_nicolson;
  } else {
    throw BadValue{"scheme must be split_step or crank_nicolson"};
  }
}

std::string show(kernels::Backend b) { return b == kernels::Backend::serial ? "serial" : "openmp"; }
void assign(kernels::Backend& field, std::string_view s) {
  if (s == "serial") {
    field = kernels::Backend::serial;
  } else if (s == "openmp") {
    field = kernels::Backend::openmp;
  } else {
    throw BadValue{"backend must be serial or openmp"};
  }
}

std::string show(PotentialKind p) { return p == PotentialKind::none ? "none" : "harmonic"; }
void assign(PotentialKind& field, std::string_view s) {
  if (s == "none") {
    field = PotentialKind::none;
  } else if (s == "harmonic") {
    field = PotentialKind::harmonic;
  } else {
    throw BadValue{"potential must be none or harmonic"};
  }
}

struct Key {
  std::string section;
  std::string name;
  std::function<void(RunConfig&, std::string_view)> set;
  std::function<std::string(const RunConfig&)> get;
};

template <class Member>
Key make_key(std::string section, std::string name, Member member) {
  return {std::move(section), std::move(name),
          [member](RunConfig& c, std::string_view s) { assign(std::invoke(member, c), s); },
          [member](const RunConfig& c) { return show(std::invoke(member, c)); }};
}

#define LOGNLS_KEY(section, field) \
  make_key(#section, #field, [](auto& c) -> auto& { return c.section.field; })

const std::vector<Key>& key_table() {
  static const std::vector<Key> keys = {
      LOGNLS_KEY(physics, hbar),
      LOGNLS_KEY(physics, mass),
      LOGNLS_KEY(physics, b),
      LOGNLS_KEY(physics, potential),
      LOGNLS_KEY(physics, potential_omega),
      LOGNLS_KEY(physics, potential_center),
      LOGNLS_KEY(grid, x_min),
      LOGNLS_KEY(grid, x_max),
      LOGNLS_KEY(grid, n_points),
      LOGNLS_KEY(evolve, dt),
      LOGNLS_KEY(evolve, n_steps),
      LOGNLS_KEY(evolve, scheme),
      LOGNLS_KEY(evolve, log_clamp),
      LOGNLS_KEY(evolve, cn_tol),
      LOGNLS_KEY(evolve, cn_max_iter),
      LOGNLS_KEY(evolve, record_every),
      LOGNLS_KEY(evolve, backend),
      LOGNLS_KEY(scenario, name),
      LOGNLS_KEY(scenario, k),
      LOGNLS_KEY(scenario, c),
      LOGNLS_KEY(scenario, d),
      LOGNLS_KEY(scenario, profile_b),
      LOGNLS_KEY(scenario, convergence_check),
      LOGNLS_KEY(scenario, x0),
      LOGNLS_KEY(scenario, residual_dt),
      LOGNLS_KEY(scenario, mass_min),
      LOGNLS_KEY(scenario, mass_ratio),
      LOGNLS_KEY(scenario, mass_count),
      LOGNLS_KEY(scenario, packet_center),
      LOGNLS_KEY(scenario, packet_halfwidth),
      LOGNLS_KEY(scenario, aperture_edge),
      LOGNLS_KEY(scenario, fringe_smoothing),
      LOGNLS_KEY(scenario, fringe_search),
      LOGNLS_KEY(scenario, snapshots),
      LOGNLS_KEY(scenario, residual_time),
      LOGNLS_KEY(output, dir),
  };
  return keys;
}

#undef LOGNLS_KEY

const char* const kSections[] = {"physics", "grid", "evolve", "scenario", "output"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail_at(std::size_t line, const std::string& message) {
  throw ConfigError("config line " + std::to_string(line) + ": " + message);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

}  // namespace

void validate(const RunConfig& cfg) {
  const Grid1D grid = cfg.grid.make();
  const PhysicsSettings& ph = cfg.physics;
  require(std::isfinite(ph.potential_omega) && ph.potential_omega >= 0.0,
          "physics: potential_omega must be non-negative");
  make_physical_params(ph, grid);
  validate(cfg.evolve);

  const ScenarioSettings& sc = cfg.scenario;
  const auto& names = scenario_names();
  require(std::find(names.begin(), names.end(), sc.name) != names.end(),
          "scenario: unknown name '" + sc.name + "'");
  require(sc.c > 0.0, "scenario: c must be positive");
  require(sc.profile_b > 0.0, "scenario: profile_b must be positive");
  require(sc.x0 > 0.0, "scenario: x0 must be positive");
  require(sc.residual_dt > 0.0, "scenario: residual_dt must be positive");
  require(sc.mass_min > 0.0, "scenario: mass_min must be positive");
  require(sc.mass_ratio > 1.0, "scenario: mass_ratio must exceed 1");
  require(sc.mass_count >= 3, "scenario: mass_count must be at least 3");
  require(sc.packet_halfwidth > 0.0, "scenario: packet_halfwidth must be positive");
  require(sc.fringe_smoothing >= 0.0, "scenario: fringe_smoothing must be non-negative");
  require(sc.fringe_search > 0.0, "scenario: fringe_search must be positive");
  require(!cfg.output.dir.empty(), "output: dir must not be empty");
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::string section;
  std::set<std::string> seen;
  bool have_scenario = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail_at(line_no, "unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (std::find(std::begin(kSections), std::end(kSections), section) == std::end(kSections)) {
        fail_at(line_no, "unknown section [" + section + "]");
      }
      if (section == "scenario") have_scenario = true;
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail_at(line_no, "expected key = value");
    if (section.empty()) fail_at(line_no, "key outside of any section");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    const auto& keys = key_table();
    const auto it = std::find_if(keys.begin(), keys.end(), [&](const Key& k) {
      return k.section == section && k.name == key;
    });
    if (it == keys.end()) fail_at(line_no, "unknown key '" + key + "' in [" + section + "]");
    if (!seen.insert(section + "." + key).second) {
      fail_at(line_no, "duplicate key '" + key + "' in [" + section + "]");
    }
    try {
      it->set(cfg, value);
    } catch (const BadValue& e) {
      fail_at(line_no, section + "." + key + ": " + e.message);
    }
  }
  if (!have_scenario) throw ConfigError("config: missing required section [scenario]");
  validate(cfg);
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read config file " + path.string());
  return parse_config(buf.str());
}

std::string render_config(const RunConfig& cfg) {
  std::string out;
  std::string section;
  for (const Key& k : key_table()) {
    if (k.section != section) {
      if (!section.empty()) out += '\n';
      section = k.section;
      out += "[" + section + "]\n";
    }
    out += k.name + " = " + k.get(cfg) + "\n";
  }
  return out;
}

std::vector<std::string> manifest_lines(const RunConfig& cfg) {
  std::vector<std::string> lines;
  for (const Key& k : key_table()) lines.push_back(k.section + "." + k.name + " = " + k.get(cfg));
  return lines;
}

}  // namespace lognls
