#pragma once

#include "fraclab/grid.hpp"

namespace fraclab {

enum class MultiplierKind {
  fractional_laplacian,  // |xi|^alpha
  inverse_laplacian,     // |xi|^-2
  riesz,                 // i xi_c / |xi|
  partial,               // i xi_c
  inverse_lambda,        // |xi|^-1
};

/// A Fourier multiplier from the fixed symbol table. Components are 1-based
/// (1 -> xi_1, 2 -> xi_2) to match the usual R_1, R_2, d_1, d_2 naming.
struct MultiplierSpec {
  MultiplierKind kind;
  double alpha = 0.0;
  int component = 0;

  static MultiplierSpec fractional_laplacian(double alpha);
  static MultiplierSpec inverse_laplacian() { return {MultiplierKind::inverse_laplacian}; }
  static MultiplierSpec riesz(int component);
  static MultiplierSpec partial(int component);
  static MultiplierSpec inverse_lambda() { return {MultiplierKind::inverse_lambda}; }
};

/// Symbol value at a nonzero wavevector.
Complex symbol(const MultiplierSpec& spec, double xi1, double xi2);

/// Multiplies each coefficient by the symbol at xi_k.
///
/// The k = 0 coefficient is mapped to 0 for every kind. Odd symbols (riesz,
/// partial) also zero the Nyquist line k_c = -n/2 of their component, where
/// the symbol cannot be made Hermitian. Inverse kinds require |c_0| <= 1e-10
/// and otherwise throw InvalidArgument("nonzero mean under inverse operator").
SpectralField apply_fourier_multiplier(const SpectralField& field, const MultiplierSpec& spec);

/// 2/3 rule: zero coefficients with max(|k1|, |k2|) > n/3.
SpectralField dealias(SpectralField field);

/// True if c_k = 0 whenever max(|k1|, |k2|) > n/3.
bool is_dealiased(const SpectralField& field);

/// Multiplies coefficient k by weight(|xi_k|), including k = 0 (|xi| = 0).
template <class RadialWeight>
SpectralField scale_radial(SpectralField field, RadialWeight&& weight) {
  const Grid2D& grid = field.grid();
  const int n = grid.n();
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) field(i1, i2) *= weight(grid.xi_norm(i1, i2));
  }
  return field;
}

}  // namespace fraclab
