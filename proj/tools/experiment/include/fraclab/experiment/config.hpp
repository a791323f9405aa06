#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fraclab/besov.hpp"
#include "fraclab/decay.hpp"
#include "fraclab/evolution.hpp"
#include "fraclab/initial_data.hpp"

namespace fraclab::experiment {

enum class Kind { oracle, linear, sqg, ks, besov, selftest };

std::string_view to_string(Kind kind);
/// Throws ConfigError for an unknown name.
Kind parse_kind(std::string_view name);

/// Malformed or out-of-range configuration. Maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleDensity {
  std::string form = "ball_indicator";  // ball_indicator | gaussian | power_law
  int dimension = 2;
  double radius = 1.0;
  double sigma = 0.3;
  double exponent = 0.0;
  double r_lo = 0.5;
  double r_hi = 1.0;

  friend bool operator==(const OracleDensity&, const OracleDensity&) = default;
};

struct TimeSchedule {
  double dt = 0.05;
  double final_time = 6.4;
  double first_sample = 0.1;
  int per_decade = 40;

  friend bool operator==(const TimeSchedule&, const TimeSchedule&) = default;
};

/// Fully resolved experiment configuration; every default is filled in by
/// load_config so the echo reparses to an equal value.
struct ExperimentConfig {
  Kind kind = Kind::oracle;
  DecayClaim claim;
  int n = 256;
  double length = 402.12385965949352;
  InitialSpectrum initial;
  OracleDensity density;
  TimeSchedule time;
  FitWindow window{10.0, 1e4};
  double smallness_budget = 1e-2;
  double tolerance = 0.02;
  std::string output_dir = "fraclab-out";
  std::string input;  // BSVF path, besov kind only
  BesovParams besov;  // besov kind only

  friend bool operator==(const ExperimentConfig& a, const ExperimentConfig& b);
};

/// Defaults for one experiment kind, before any overrides.
ExperimentConfig default_config(Kind kind);

/// Parses JSON text. Unknown keys, duplicate keys and range violations throw
/// ConfigError with the line of the offending key. `kind_hint` supplies the
/// kind when the text has no "kind" key and must agree with it otherwise.
ExperimentConfig parse_config(std::string_view text, std::optional<Kind> kind_hint = {});
ExperimentConfig load_config(const std::filesystem::path& path,
                             std::optional<Kind> kind_hint = {});

/// Re-checks every range constraint; used after CLI overrides.
void validate(const ExperimentConfig& config);

nlohmann::ordered_json to_json(const ExperimentConfig& config);

/// Run configuration for the grid experiments (linear, sqg, ks).
RunConfig make_run_config(const ExperimentConfig& config);
/// Sample times of the configured schedule.
std::vector<double> sample_times(const ExperimentConfig& config);

}  // namespace fraclab::experiment
