#include <benchmark/benchmark.h>

#include <numbers>

#include "fraclab/initial_data.hpp"
#include "fraclab/keller_segel.hpp"
#include "fraclab/sqg.hpp"

namespace {

using namespace fraclab;

SpectralField small_data(int n) {
  const Grid2D grid(n, 2.0 * std::numbers::pi);
  InitialSpectrum spec;
  spec.amplitude = 0.1;
  spec.cutoff = n / 8.0;
  return make_initial_spectrum(grid, spec, {0.0, 2.0, 2.0}, DyadicProfile{});
}

void BM_SqgStep(benchmark::State& state) {
  sqg::State s{small_data(static_cast<int>(state.range(0))), 0.0, 1.0};
  for (auto _ : state) {
    s = sqg::step(s, 1e-3);
    benchmark::DoNotOptimize(s.theta);
  }
}
BENCHMARK(BM_SqgStep)->Arg(128)->Arg(256);

void BM_KellerSegelStep(benchmark::State& state) {
  ks::State s{small_data(static_cast<int>(state.range(0))), 0.0, 1.0};
  for (auto _ : state) {
    s = ks::step(s, 1e-3);
    benchmark::DoNotOptimize(s.u);
  }
}
BENCHMARK(BM_KellerSegelStep)->Arg(128)->Arg(256);

}  // namespace
