#include <algorithm>
#include <chrono>
#include <ctime>
#include <iostream>

#include "fraclab/bsvf.hpp"
#include "fraclab/error.hpp"
#include "fraclab/evolution.hpp"
#include "fraclab/fft.hpp"
#include "fraclab/experiment/record.hpp"
#include "fraclab/keller_segel.hpp"
#include "fraclab/oracle.hpp"
#include "fraclab/sqg.hpp"

#ifndef FRACLAB_VERSION
#define FRACLAB_VERSION "unknown"
#endif

namespace fraclab::experiment {

namespace {

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buf;
}

RadialSpectralDensity make_density(const OracleDensity& d) {
  if (d.form == "gaussian") return RadialSpectralDensity::gaussian(d.dimension, d.sigma);
  if (d.form == "power_law") {
    return RadialSpectralDensity::power_law(d.dimension, d.exponent, d.r_lo, d.r_hi);
  }
  return RadialSpectralDensity::ball_indicator(d.dimension, d.radius);
}

void fit_and_report(RunRecord& record, const NormSeries& decay) {
  const ExperimentConfig& c = record.config;
  record.fits = {fit_decay_slope(decay, c.window)};
  const DecayClaim claims[] = {c.claim};
  record.report = build_report(record.fits, claims, c.tolerance);
  record.passed = record.report.passed;
}

bool nonincreasing(const NormSeries& s, double slack) {
  for (std::size_t i = 1; i < s.values.size(); ++i) {
    if (s.values[i] > s.values[i - 1] * (1.0 + slack)) return false;
  }
  return true;
}

void run_oracle(RunRecord& record) {
  const ExperimentConfig& c = record.config;
  const DyadicProfile profile;
  const RadialSpectralDensity density = make_density(c.density);
  const auto times = sample_times(c);
  NormSeries decay = oracle_besov_series(density, c.claim, OracleNorm::decay, times, profile);
  NormSeries bounded = oracle_besov_series(density, c.claim, OracleNorm::bounded, times, profile);
  record.details["bounded_nonincreasing"] = nonincreasing(bounded, 1e-12);
  // Series are recorded before fitting so a failed fit still leaves them.
  record.series.push_back({"decay", std::move(decay), ""});
  record.series.push_back({"bounded", std::move(bounded), ""});
  fit_and_report(record, record.series.front().series);
}

void run_grid(RunRecord& record) {
  const ExperimentConfig& c = record.config;
  const RunConfig run = make_run_config(c);
  RunResult result(run.grid);
  switch (c.kind) {
    case Kind::sqg:
      result = sqg::run(run);
      break;
    case Kind::ks:
      result = ks::run(run);
      break;
    default: {
      NonlinearTerm none = [](const SpectralField& v, double& speed) {
        speed = 0.0;
        return SpectralField(v.grid());
      };
      result = run_evolution(run, none, "linear");
      break;
    }
  }
  // Besov norms come first, then Lebesgue norms; the bounded norm is the
  // last Besov entry.
  const std::size_t bounded_index = run.norms.size() - 1;
  const std::size_t decay_index = run.lebesgue_norms.empty() ? 0 : run.norms.size();
  record.series.push_back({"decay", result.series[decay_index], ""});
  record.series.push_back({"bounded", result.series[bounded_index], ""});

  const NormSeries& bounded = result.series[bounded_index];
  const double bounded0 = result.initial_norms[bounded_index];
  const double bounded_max = *std::max_element(bounded.values.begin(), bounded.values.end());
  auto& d = record.details;
  d["config_hash"] = result.config_hash;
  d["initial_smallness"] = result.initial_smallness;
  d["initial_decay_norm"] = result.initial_norms[decay_index];
  d["initial_bounded_norm"] = bounded0;
  d["bounded_max_ratio"] = bounded0 > 0.0 ? bounded_max / bounded0 : 0.0;
  d["steps"] = result.diagnostics.steps;
  d["max_courant"] = result.diagnostics.max_courant;
  d["max_mean_drift"] = result.diagnostics.max_mean_drift;
  d["max_l2_ratio"] = result.diagnostics.max_l2_ratio;
  d["min_value"] = result.diagnostics.min_value;
  if (c.kind == Kind::ks) {
    const double area = run.grid.length() * run.grid.length();
    d["initial_mass"] = result.initial_state(0, 0).real() * area;
    d["final_mass"] = result.final_state(0, 0).real() * area;
    // Scale for the conservation tolerance: h^2 sum |u0|.
    d["initial_l1"] = lebesgue_norm(inverse_transform(result.initial_state), 1.0);
  }
  fit_and_report(record, record.series.front().series);
}

void run_besov(RunRecord& record) {
  const ExperimentConfig& c = record.config;
  if (c.input.empty()) throw ConfigError("besov experiments require 'input' (a BSVF file)");
  const RealField field = read_bsvf(std::filesystem::path(c.input));
  const DyadicProfile profile;
  const BesovNorm norm = besov_norm(field, c.besov, profile);
  record.details["norm"] = norm.value;
  record.details["label"] = besov_label(c.besov);
  record.details["j_min"] = norm.range.j_min;
  record.details["j_max"] = norm.range.j_max;
  record.passed = true;
}

void run_checks(RunRecord& record) {
  record.checks = run_selftest(record.config.initial.seed);
  record.passed = std::all_of(record.checks.begin(), record.checks.end(),
                              [](const Check& k) { return k.passed; });
}

}  // namespace

std::string artifact_version() { return std::string("fraclab ") + FRACLAB_VERSION; }

int RunRecord::exit_code() const {
  if (failure) {
    if (failure->category == "numerical") return kExitNumerical;
    return kExitUsage;
  }
  return passed ? kExitPass : kExitReportFailure;
}

RunRecord compute(const ExperimentConfig& config) {
  RunRecord record;
  record.config = config;
  record.version = artifact_version();
  record.started = utc_now();
  try {
    validate(config);
    switch (config.kind) {
      case Kind::oracle:
        run_oracle(record);
        break;
      case Kind::linear:
      case Kind::sqg:
      case Kind::ks:
        run_grid(record);
        break;
      case Kind::besov:
        run_besov(record);
        break;
      case Kind::selftest:
        run_checks(record);
        break;
    }
  } catch (const ConfigError& e) {
    record.failure = Failure{"config", e.what()};
  } catch (const InvalidArgument& e) {
    record.failure = Failure{"config", e.what()};
  } catch (const FormatError& e) {
    record.failure = Failure{"io", e.what()};
  } catch (const NumericalAbort& e) {
    record.failure = Failure{"numerical", e.what()};
  }
  if (record.failure) record.passed = false;
  record.finished = utc_now();
  return record;
}

RunRecord execute(const ExperimentConfig& config) {
  RunRecord record = compute(config);
  emit_outputs(record, config.output_dir);
  return record;
}

}  // namespace fraclab::experiment
