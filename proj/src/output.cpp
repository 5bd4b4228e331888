#include "lognls/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "lognls/config.hpp"
#include "lognls/errors.hpp"

namespace lognls {

std::string format_scientific(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific);
  return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("error while writing " + path.string());
}

void write_results(const ScenarioReport& report, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    out << (i ? "," : "") << report.columns[i];
  }
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_scientific(row[i]);
    out << '\n';
  }
  finish(out, path);
}

void write_snapshots(const std::vector<WaveField>& fields, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << "t,x,re,im,density\n";
  for (const WaveField& f : fields) {
    const std::string t = format_scientific(f.time);
    for (std::size_t j = 0; j < f.size(); ++j) {
      const cplx z = f.values[j];
      out << t << ',' << format_scientific(f.grid.x(j)) << ',' << format_scientific(z.real())
          << ',' << format_scientific(z.imag()) << ',' << format_scientific(std::norm(z)) << '\n';
    }
  }
  finish(out, path);
}

void write_manifest(const ScenarioReport& report, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << "artifact = lognls\n";
  out << "version = " << kVersion << '\n';
  out << "scenario = " << report.name << '\n';
  for (const auto& line : manifest_lines(report.config)) out << line << '\n';
  for (const auto& [name, value] : report.metrics) {
    out << "metric." << name << " = " << format_scientific(value) << '\n';
  }
  out << "passed = " << (report.passed() ? "true" : "false") << '\n';
  out << "criterion,measured,tolerance,pass\n";
  for (const Verdict& v : report.verdicts) {
    out << v.criterion << ',' << format_scientific(v.measured) << ','
        << format_scientific(v.tolerance) << ',' << (v.pass ? "true" : "false") << '\n';
  }
  finish(out, path);
}

double parse_field(std::string_view s, const std::filesystem::path& path, std::size_t line) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw IoError(path.string() + ":" + std::to_string(line) + ": malformed number");
  }
  return v;
}

}  // namespace

void write_outputs(const ScenarioReport& report, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw IoError("cannot create output directory " + dir.string());
  }
  write_results(report, dir / "results.csv");
  for (const auto& series : report.snapshots) write_snapshots(series.snapshots, dir / series.file_name);
  write_manifest(report, dir / "manifest.txt");
}

std::vector<WaveField> read_snapshots(const std::filesystem::path& path, const Grid1D& grid) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open snapshot file " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != "t,x,re,im,density") {
    throw IoError(path.string() + ": expected header t,x,re,im,density");
  }
  std::vector<WaveField> fields;
  std::vector<cplx> values;
  double t_current = 0.0;
  std::size_t line_no = 1;
  auto flush = [&]() {
    if (values.size() != grid.size()) {
      throw DomainError(path.string() + ": snapshot at t = " + format_scientific(t_current) +
                        " has " + std::to_string(values.size()) + " points, grid has " +
                        std::to_string(grid.size()));
    }
    fields.emplace_back(grid, std::move(values), t_current);
    values = {};
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    double cols[5];
    std::size_t start = 0;
    for (int c = 0; c < 5; ++c) {
      const auto comma = c < 4 ? line.find(',', start) : line.size();
      if (comma == std::string::npos) {
        throw IoError(path.string() + ":" + std::to_string(line_no) + ": expected 5 columns");
      }
      cols[c] = parse_field(std::string_view(line).substr(start, comma - start), path, line_no);
      start = comma + 1;
    }
    if (!values.empty() && cols[0] != t_current) flush();
    t_current = cols[0];
    const std::size_t j = values.size();
    if (j >= grid.size() || std::abs(cols[1] - grid.x(j)) > 1e-9 * grid.length()) {
      throw DomainError(path.string() + ":" + std::to_string(line_no) +
                        ": x does not match the configured grid");
    }
    values.emplace_back(cols[2], cols[3]);
  }
  if (!values.empty()) flush();
  return fields;
}

}  // namespace lognls
