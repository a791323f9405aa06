#pragma once

#include <cstdint>
#include <optional>

#include "fraclab/besov.hpp"
#include "fraclab/dyadic.hpp"
#include "fraclab/grid.hpp"

namespace fraclab {

/// Seeded random-phase initial data with radial amplitude
///   A(r) = |r|^envelope_exponent * exp(-r / cutoff) * W(r),
/// where W = sum_{j = j_lo}^{j_hi} phi(2^-j r) is a smooth shell window. With
/// envelope_exponent = s - 1 the low-frequency blocks satisfy
/// 2^{-js} ||Delta_j u||_{L^2} ~ const, i.e. the data sit exactly in B^-s_{2,inf}.
struct InitialSpectrum {
  /// Value of the normalizing Besov norm after scaling; 0 gives the zero field.
  double amplitude = 1e-2;
  std::optional<int> j_lo;  // default: lowest grid block
  std::optional<int> j_hi;  // default: highest grid block
  double envelope_exponent = 0.0;
  double cutoff = 1.0;
  std::uint64_t seed = 1;

  void validate() const;
  friend bool operator==(const InitialSpectrum&, const InitialSpectrum&) = default;
};

/// Hermitian, mean-free, 2/3-dealiased spectrum scaled so that
/// besov_norm(result, normalization) == spec.amplitude.
SpectralField make_initial_spectrum(const Grid2D& grid, const InitialSpectrum& spec,
                                    const BesovParams& normalization,
                                    const DyadicProfile& profile);

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
double unit_uniform(std::uint64_t bits);

}  // namespace fraclab
