#include "fraclab/initial_data.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "fraclab/error.hpp"
#include "fraclab/multiplier.hpp"

namespace fraclab {

void InitialSpectrum::validate() const {
  if (!(amplitude >= 0.0) || !std::isfinite(amplitude)) {
    throw InvalidArgument("initial amplitude must be finite and >= 0");
  }
  if (!(cutoff > 0.0) || !std::isfinite(cutoff)) throw InvalidArgument("envelope cutoff must be > 0");
  if (!std::isfinite(envelope_exponent)) throw InvalidArgument("envelope exponent must be finite");
  if (j_lo && j_hi && *j_lo > *j_hi) throw InvalidArgument("shell window requires j_lo <= j_hi");
}

double unit_uniform(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

SpectralField make_initial_spectrum(const Grid2D& grid, const InitialSpectrum& spec,
                                    const BesovParams& normalization,
                                    const DyadicProfile& profile) {
  spec.validate();
  normalization.validate();
  const BlockRange range = block_range(grid);
  const int j_lo = spec.j_lo.value_or(range.j_min);
  const int j_hi = spec.j_hi.value_or(range.j_max);
  auto amplitude = [&](double r) {
    if (r == 0.0) return 0.0;
    const double window = profile.cutoff(std::ldexp(r, -(j_hi + 1))) - profile.cutoff(std::ldexp(r, -j_lo));
    if (window <= 0.0) return 0.0;
    return std::pow(r, spec.envelope_exponent) * std::exp(-r / spec.cutoff) * window;
  };

  const int n = grid.n();
  std::mt19937_64 rng(spec.seed);
  SpectralField field(grid);
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      const int p1 = (n - i1) % n;
      const int p2 = (n - i2) % n;
      const double phase = 2.0 * std::numbers::pi * unit_uniform(rng());
      const long self = static_cast<long>(i1) * n + i2;
      const long partner = static_cast<long>(p1) * n + p2;
      if (partner < self) continue;
      const double a = amplitude(grid.xi_norm(i1, i2));
      if (partner == self) {
        field(i1, i2) = a * std::cos(phase);
      } else {
        field(i1, i2) = std::polar(a, phase);
        field(p1, p2) = std::polar(a, -phase);
      }
    }
  }
  field = dealias(std::move(field));
  field(0, 0) = 0.0;

  if (spec.amplitude == 0.0) return SpectralField(grid);
  const double raw = besov_norm(field, normalization, profile).value;
  if (!(raw > 0.0)) {
    throw InvalidArgument("initial spectrum is empty on this grid (check shell window)");
  }
  field *= spec.amplitude / raw;
  return field;
}

}  // namespace fraclab
