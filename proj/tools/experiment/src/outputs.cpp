#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fraclab/experiment/record.hpp"

namespace fraclab::experiment {

namespace {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_atomically(const fs::path& path, const std::string& contents) {
  fs::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + temp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw IoError("write failed for " + temp.string());
  }
  std::error_code ec;
  fs::rename(temp, path, ec);
  if (ec) throw IoError("cannot rename " + temp.string() + " to " + path.string() + ": " + ec.message());
}

std::string file_stem(const RunRecord& record) { return std::string(to_string(record.config.kind)); }

std::string gnuplot_title(const std::string& text) {
  std::string out;
  for (char ch : text) {
    if (ch == '\'') out += "''";
    else out += ch;
  }
  return out;
}

std::string plot_script(const RunRecord& record) {
  const std::string stem = file_stem(record);
  std::ostringstream gp;
  gp << "set terminal pngcairo size 900,600\n"
     << "set output '" << stem << ".png'\n"
     << "set datafile separator ','\n"
     << "set logscale xy\n"
     << "set xlabel 't'\n"
     << "set ylabel 'norm'\n"
     << "set key top right\n"
     << "set format y '%g'\n";
  gp << "plot ";
  bool first = true;
  for (const auto& s : record.series) {
    if (!first) gp << ", \\\n     ";
    first = false;
    gp << "'" << s.path << "' using 1:2 skip 1 with linespoints pt 7 ps 0.5 title '"
       << gnuplot_title(s.role + " " + s.series.descriptor) << "'";
  }
  if (!record.fits.empty() && !record.report.entries.empty()) {
    const FitResult& fit = record.fits.front();
    const double beta = record.report.entries.front().theoretical;
    // Reference line with the theoretical exponent through the fitted amplitude.
    if (!first) gp << ", \\\n     ";
    gp << "(x >= " << shortest(fit.window_lo) << " && x <= " << shortest(fit.window_hi) << ") ? "
       << shortest(std::exp(fit.intercept)) << " * (1 + x)**(" << shortest(beta)
       << ") : 1/0 with lines dashtype 2 lw 2 title 'slope " << shortest(beta) << "'";
  }
  gp << "\n";
  return gp.str();
}

}  // namespace

std::string series_csv(const NormSeries& series) {
  std::string out = "t,value\n";
  for (std::size_t i = 0; i < series.times.size(); ++i) {
    out += shortest(series.times[i]);
    out += ',';
    out += shortest(series.values[i]);
    out += '\n';
  }
  return out;
}

NormSeries parse_series_csv(const std::string& text, const std::string& name) {
  NormSeries series;
  series.name = name;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "t,value") {
    throw IoError("series '" + name + "': missing 't,value' header");
  }
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    const auto comma = line.find(',');
    double t = 0.0, v = 0.0;
    const char* end = line.data() + line.size();
    if (comma == std::string::npos ||
        std::from_chars(line.data(), line.data() + comma, t).ptr != line.data() + comma ||
        std::from_chars(line.data() + comma + 1, end, v).ptr != end) {
      throw IoError("series '" + name + "': malformed row " + std::to_string(row));
    }
    series.times.push_back(t);
    series.values.push_back(v);
  }
  return series;
}

ojson to_json(const RunRecord& record) {
  ojson out;
  out["version"] = record.version;
  out["config"] = to_json(record.config);
  out["started"] = record.started;
  out["finished"] = record.finished;
  ojson series = ojson::array();
  for (const auto& s : record.series) {
    series.push_back({{"role", s.role},
                      {"name", s.series.name},
                      {"descriptor", s.series.descriptor},
                      {"path", s.path},
                      {"samples", s.series.times.size()}});
  }
  out["series"] = series;
  ojson fits = ojson::array();
  for (const auto& f : record.fits) {
    fits.push_back({{"slope", f.slope},
                    {"intercept", f.intercept},
                    {"residual", f.residual},
                    {"window", {f.window_lo, f.window_hi}},
                    {"samples", f.samples}});
  }
  out["fits"] = fits;
  ojson entries = ojson::array();
  for (const auto& e : record.report.entries) {
    entries.push_back({{"claim", to_string(e.claim.kind)},
                       {"s", e.claim.s},
                       {"ell", e.claim.ell},
                       {"alpha", e.claim.alpha},
                       {"p", e.claim.p},
                       {"r", e.claim.r},
                       {"theoretical", e.theoretical},
                       {"fitted", e.fitted},
                       {"relative_error", e.relative_error},
                       {"passed", e.passed}});
  }
  out["report"] = {{"tolerance", record.report.tolerance},
                   {"passed", record.report.passed},
                   {"entries", entries}};
  if (!record.checks.empty()) {
    ojson checks = ojson::array();
    for (const auto& k : record.checks) {
      checks.push_back({{"name", k.name}, {"passed", k.passed}, {"detail", k.detail}});
    }
    out["checks"] = checks;
  }
  out["details"] = record.details;
  out["passed"] = record.passed;
  if (record.failure) {
    out["failure"] = {{"category", record.failure->category},
                      {"message", record.failure->message}};
  }
  return out;
}

void emit_outputs(RunRecord& record, const fs::path& directory) {
  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec) throw IoError("cannot create output directory " + directory.string() + ": " + ec.message());
  const std::string stem = file_stem(record);
  for (auto& s : record.series) {
    s.path = stem + "_" + s.role + ".csv";
    write_atomically(directory / s.path, series_csv(s.series));
  }
  if (!record.series.empty()) write_atomically(directory / (stem + ".gp"), plot_script(record));
  write_atomically(directory / (stem + "_record.json"), to_json(record).dump() + "\n");
}

}  // namespace fraclab::experiment
