#include <benchmark/benchmark.h>

#include <numbers>

#include "fraclab/besov.hpp"
#include "fraclab/initial_data.hpp"

namespace {

using namespace fraclab;

// Args: grid size, Lebesgue exponent (0 encodes infinity).
void BM_BesovNorm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double p = state.range(1) == 0 ? kInfinity : static_cast<double>(state.range(1));
  const Grid2D grid(n, 2.0 * std::numbers::pi);
  InitialSpectrum spec;
  spec.amplitude = 1.0;
  spec.cutoff = n / 8.0;
  const DyadicProfile profile;
  const SpectralField f = make_initial_spectrum(grid, spec, {0.0, 2.0, 2.0}, profile);
  for (auto _ : state) {
    benchmark::DoNotOptimize(besov_norm(f, {0.5, p, 1.0}, profile).value);
  }
}
BENCHMARK(BM_BesovNorm)->Args({128, 2})->Args({128, 3})->Args({256, 2})->Args({256, 0});

}  // namespace
