#pragma once

#include "fraclab/dyadic.hpp"
#include "fraclab/grid.hpp"

namespace fraclab {

/// Pointwise product a*b formed in physical space, transformed and truncated
/// by the 2/3 rule. For inputs supported in max|k| <= n/3 this is the exact
/// product restricted to the retained band.
SpectralField dealiased_product(const RealField& a, const RealField& b);

/// fg = T_f g + T_g f + R(f, g).
struct BonyPieces {
  RealField paraproduct_fg;  // T_f g = sum_j S_{j-1} f Delta_j g
  RealField paraproduct_gf;  // T_g f
  RealField remainder;       // R(f, g) = sum_j Delta_j f (Delta_{j-1} + Delta_j + Delta_{j+1}) g
};

/// Bony decomposition with products formed in physical space and dealiased.
/// Delta_j annihilates the mean and S_{j-1} keeps it, so T_f g contains
/// mean(f) g; the constant mean(f)mean(g) is carried by the remainder and the
/// three pieces always sum to the dealiased product. Throws InvalidArgument on grid mismatch.
BonyPieces bony_decompose(const RealField& f, const RealField& g, const DyadicProfile& profile);

}  // namespace fraclab
