#include <benchmark/benchmark.h>

#include "fraclab/oracle.hpp"

namespace {

using namespace fraclab;

void BM_OracleBlockNorm(benchmark::State& state) {
  const auto density = RadialSpectralDensity::ball_indicator(2, 1.0);
  const DyadicProfile profile;
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_block_norm(density, -4, t, 1.0, profile));
  }
}
BENCHMARK(BM_OracleBlockNorm)->Arg(1)->Arg(100)->Arg(10000);

void BM_OracleBesovNorm(benchmark::State& state) {
  const auto density = RadialSpectralDensity::ball_indicator(2, 1.0);
  const DyadicProfile profile;
  DecayClaim claim;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_besov_norm(density, claim, OracleNorm::decay, 100.0, profile));
  }
}
BENCHMARK(BM_OracleBesovNorm);

}  // namespace
