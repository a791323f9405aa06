#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fraclab/experiment/record.hpp"

using namespace fraclab;
using namespace fraclab::experiment;
namespace fs = std::filesystem;

namespace {
std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("fraclab_outputs_" + name);
  fs::remove_all(dir);
  return dir;
}

ExperimentConfig quick_oracle() {
  ExperimentConfig c = parse_config(R"({"kind": "oracle", "time": {"final": 10000, "per_decade": 10}})");
  return c;
}
}  // namespace

TEST(Outputs, CsvHasHeaderAndOneRowPerSample) {
  NormSeries s;
  s.times = {0.1, 1.0, 10.0};
  s.values = {3.0, 2.5, 1e-300};
  const std::string csv = series_csv(s);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  EXPECT_EQ(csv.substr(0, 8), "t,value\n");
  const NormSeries back = parse_series_csv(csv, "x");
  EXPECT_EQ(back.times, s.times);
  EXPECT_EQ(back.values, s.values);
}

TEST(Outputs, MalformedCsvIsRejected) {
  EXPECT_THROW(parse_series_csv("time,value\n", "x"), IoError);
  EXPECT_THROW(parse_series_csv("t,value\n1;2\n", "x"), IoError);
  EXPECT_THROW(parse_series_csv("t,value\n1,2x\n", "x"), IoError);
}

TEST(Outputs, EmptySeriesWritesOnlyTheRecord) {
  const fs::path dir = scratch("empty");
  RunRecord r;
  r.config = default_config(Kind::selftest);
  emit_outputs(r, dir);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    ++files;
    EXPECT_EQ(e.path().filename(), "selftest_record.json");
  }
  EXPECT_EQ(files, 1u);
  fs::remove_all(dir);
}

TEST(Outputs, OracleRunIsByteStableAndLeavesNoTemporaries) {
  const fs::path a = scratch("a"), b = scratch("b");
  RunRecord ra = compute(quick_oracle());
  RunRecord rb = compute(quick_oracle());
  emit_outputs(ra, a);
  emit_outputs(rb, b);
  ASSERT_EQ(ra.exit_code(), kExitPass);
  for (const char* name : {"oracle_decay.csv", "oracle_bounded.csv", "oracle.gp"}) {
    EXPECT_EQ(slurp(a / name), slurp(b / name)) << name;
  }
  for (const auto& e : fs::directory_iterator(a)) EXPECT_NE(e.path().extension(), ".tmp");
  const auto record = nlohmann::json::parse(slurp(a / "oracle_record.json"));
  EXPECT_EQ(record.at("passed"), true);
  EXPECT_EQ(record.at("series").size(), 2u);
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(Outputs, FailuresMapToExitCodes) {
  ExperimentConfig c = quick_oracle();
  c.claim.alpha = -1.0;
  const RunRecord bad = compute(c);
  ASSERT_TRUE(bad.failure.has_value());
  EXPECT_EQ(bad.failure->category, "config");
  EXPECT_EQ(bad.exit_code(), kExitUsage);

  ExperimentConfig strict = quick_oracle();
  strict.tolerance = 1e-9;
  EXPECT_EQ(compute(strict).exit_code(), kExitReportFailure);

  ExperimentConfig missing = default_config(Kind::besov);
  missing.input = "/nonexistent/field.bsvf";
  const RunRecord io = compute(missing);
  ASSERT_TRUE(io.failure.has_value());
  EXPECT_EQ(io.failure->category, "io");
}

TEST(Outputs, UnwritableDirectoryThrows) {
  RunRecord r;
  r.config = default_config(Kind::selftest);
  EXPECT_THROW(emit_outputs(r, "/proc/fraclab_cannot_write_here"), IoError);
}
