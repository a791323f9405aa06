#include <benchmark/benchmark.h>

#include <numbers>

#include "fraclab/fft.hpp"
#include "fraclab/initial_data.hpp"
#include "fraclab/multiplier.hpp"

namespace {

using namespace fraclab;

SpectralField sample_field(int n) {
  const Grid2D grid(n, 2.0 * std::numbers::pi);
  InitialSpectrum spec;
  spec.amplitude = 1.0;
  spec.cutoff = n / 8.0;
  return make_initial_spectrum(grid, spec, {0.0, 2.0, 2.0}, DyadicProfile{});
}

void BM_RoundTrip(benchmark::State& state) {
  const SpectralField f = sample_field(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    SpectralField back = forward_transform(inverse_transform(f));
    benchmark::DoNotOptimize(back);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.grid().size()));
}
BENCHMARK(BM_RoundTrip)->Arg(64)->Arg(128)->Arg(256)->Arg(512);

void BM_FractionalLaplacian(benchmark::State& state) {
  const SpectralField f = sample_field(static_cast<int>(state.range(0)));
  const MultiplierSpec spec = MultiplierSpec::fractional_laplacian(0.5);
  for (auto _ : state) {
    SpectralField g = apply_fourier_multiplier(f, spec);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_FractionalLaplacian)->Arg(128)->Arg(256);

}  // namespace
