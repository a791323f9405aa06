// fraclab: command-line front end for the decay experiments.
//
//   fraclab <oracle|linear|sqg|ks|besov|selftest> [--config PATH] [--out DIR]
//           [--seed U64] [--threads N] [--tolerance PCT]
//
// Exit status: 0 pass, 1 report failure, 2 usage or config error, 3 numerical abort.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "fraclab/error.hpp"
#include "fraclab/experiment/config.hpp"
#include "fraclab/experiment/record.hpp"
#include "fraclab/parallel.hpp"

namespace {

using namespace fraclab;
using namespace fraclab::experiment;

void print_summary(const RunRecord& record) {
  std::cout << to_string(record.config.kind) << ": " << (record.passed ? "PASS" : "FAIL") << '\n';
  for (std::size_t i = 0; i < record.report.entries.size(); ++i) {
    const auto& e = record.report.entries[i];
    std::cout << "  claim " << to_string(e.claim.kind) << " theory " << e.theoretical << " fitted "
              << e.fitted << " rel.err " << e.relative_error << " (tol " << record.report.tolerance
              << ")\n";
  }
  if (record.config.kind == Kind::besov && !record.failure) {
    const auto& d = record.details;
    std::cout << "  " << d["label"].get<std::string>() << " = " << d["norm"].get<double>()
              << "  blocks j = " << d["j_min"].get<int>() << ".." << d["j_max"].get<int>() << '\n';
  }
  for (const auto& c : record.checks) {
    std::cout << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << "  " << c.detail << '\n';
  }
  for (const auto& s : record.series) std::cout << "  wrote " << s.path << '\n';
  if (record.failure) {
    std::cerr << "error (" << record.failure->category << "): " << record.failure->message << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fraclab: Besov-space decay experiments for fractional dissipative equations"};
  app.require_subcommand(1, 1);
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  double tolerance_pct = 0.0;
  auto* config_opt = app.add_option("--config", config_path, "JSON experiment config")
                         ->check(CLI::ExistingFile);
  auto* out_opt = app.add_option("--out", out_dir, "output directory (FRACLAB_OUT overrides)");
  auto* seed_opt = app.add_option("--seed", seed, "seed for the random initial data");
  app.add_option("--threads", threads, "worker threads, 0 = hardware concurrency");
  auto* tol_opt = app.add_option("--tolerance", tolerance_pct, "slope tolerance in percent")
                      ->check(CLI::PositiveNumber);
  for (const char* name : {"oracle", "linear", "sqg", "ks", "besov", "selftest"}) {
    app.add_subcommand(name, std::string("run the ") + name + " experiment")->fallthrough();
  }
  (void)config_opt;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : kExitUsage;
  }

  try {
    const Kind kind = parse_kind(app.get_subcommands().front()->get_name());
    ExperimentConfig config =
        config_path.empty() ? default_config(kind) : load_config(config_path, kind);
    if (*seed_opt) config.initial.seed = seed;
    if (*tol_opt) config.tolerance = tolerance_pct / 100.0;
    if (*out_opt) config.output_dir = out_dir;
    if (const char* env = std::getenv("FRACLAB_OUT"); env && *env) config.output_dir = env;
    validate(config);
    set_thread_count(threads);

    RunRecord record = execute(config);
    print_summary(record);
    return record.exit_code();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalAbort& e) {
    std::cerr << "numerical abort: " << e.what() << '\n';
    return kExitNumerical;
  }
}
