#pragma once

#include "fraclab/grid.hpp"

namespace fraclab {

/// c_k = n^-2 sum_x f(x) exp(-i xi_k . x). Rejects non-finite input.
SpectralField forward_transform(const RealField& field);

/// Real part of sum_k c_k exp(i xi_k . x).
RealField inverse_transform(const SpectralField& field);

struct CheckedInverse {
  RealField field;
  /// max |Im f(x)| / max |f(x)| of the complex synthesis; zero for Hermitian input.
  double imaginary_residue;
};

CheckedInverse inverse_transform_checked(const SpectralField& field);

}  // namespace fraclab
