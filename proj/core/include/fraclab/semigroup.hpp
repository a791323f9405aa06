#pragma once

#include <vector>

#include "fraclab/grid.hpp"

namespace fraclab {

/// Exact solution of d_t u + Lambda^alpha u = 0: coefficient k is multiplied
/// by exp(-t |xi_k|^alpha); the mean is unchanged.
/// Throws InvalidArgument for t < 0 or alpha outside (0, 2].
SpectralField evolve_linear(const SpectralField& field, double alpha, double t);

/// exp(-t |xi|^alpha) per coefficient in storage order (1 at k = 0).
std::vector<double> linear_propagator(const Grid2D& grid, double alpha, double t);

}  // namespace fraclab
