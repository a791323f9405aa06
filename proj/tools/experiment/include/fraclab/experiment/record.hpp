#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fraclab/decay.hpp"
#include "fraclab/experiment/config.hpp"

namespace fraclab::experiment {

/// Exit statuses of the command-line tool; a stable contract.
enum ExitCode : int {
  kExitPass = 0,
  kExitReportFailure = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Failure {
  std::string category;  // "config", "numerical" or "io"
  std::string message;
};

/// A norm series together with the role it plays in the experiment
/// ("decay" is fitted, "bounded" is only recorded).
struct RecordedSeries {
  std::string role;
  NormSeries series;
  std::string path;  // relative to the output directory, set by emit_outputs
};

struct RunRecord {
  ExperimentConfig config;
  std::string version;
  std::string started;
  std::string finished;
  std::vector<RecordedSeries> series;
  std::vector<FitResult> fits;  // aligned with report.entries
  DecayReport report;
  std::vector<Check> checks;  // selftest only
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  bool passed = false;
  std::optional<Failure> failure;

  int exit_code() const;
};

std::string artifact_version();

/// Runs the experiment without touching the file system. Module errors are
/// captured in record.failure rather than thrown.
RunRecord compute(const ExperimentConfig& config);

/// compute() followed by emit_outputs() into config.output_dir.
RunRecord execute(const ExperimentConfig& config);

/// Writes one CSV per series ("t,value", shortest round-trip decimals), the
/// record as a single JSON line, and a gnuplot script. Every file is written
/// to a temporary name and renamed into place. Throws IoError.
void emit_outputs(RunRecord& record, const std::filesystem::path& directory);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "t,value" CSV text for a series; byte-stable.
std::string series_csv(const NormSeries& series);
/// Parses text written by series_csv.
NormSeries parse_series_csv(const std::string& text, const std::string& name);

nlohmann::ordered_json to_json(const RunRecord& record);

/// The property suite run by the selftest experiment.
std::vector<Check> run_selftest(std::uint64_t seed);

}  // namespace fraclab::experiment
