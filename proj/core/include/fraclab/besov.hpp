#pragma once

#include <limits>
#include <span>
#include <vector>

#include "fraclab/dyadic.hpp"
#include "fraclab/grid.hpp"

namespace fraclab {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Homogeneous Besov index triple; p and r may be kInfinity.
struct BesovParams {
  double s = 0.0;
  double p = 2.0;
  double r = 2.0;

  /// Throws InvalidArgument unless p >= 1 and r >= 1 (or infinite) and s finite.
  void validate() const;
  friend bool operator==(const BesovParams&, const BesovParams&) = default;
};

/// Dyadic indices whose shell 2^j [3/4, 8/3] meets [xi_min, xi_top] of a grid.
struct BlockRange {
  int j_min = 0;
  int j_max = -1;

  bool empty() const { return j_max < j_min; }
  int count() const { return empty() ? 0 : j_max - j_min + 1; }
  friend bool operator==(const BlockRange&, const BlockRange&) = default;
};

/// Blocks touching [2 pi / L, largest |xi| on the grid]. Every block outside
/// this range annihilates every field on the grid.
BlockRange block_range(const Grid2D& grid);

enum class ProjectionKind { block, low_pass };

/// Delta_j (kind = block) or S_j (kind = low_pass). Delta_j zeroes k = 0;
/// S_j keeps it.
SpectralField project(const SpectralField& field, int j, ProjectionKind kind,
                      const DyadicProfile& profile);

/// (h^2 sum |f|^p)^(1/p), or max |f| for p = inf.
double lebesgue_norm(const RealField& field, double p);

/// ||Delta_j f||_{L^p} for j in range, ascending. The k = 0 coefficient is ignored.
std::vector<double> block_lebesgue_norms(const SpectralField& field, double p,
                                         const DyadicProfile& profile, BlockRange range);

/// (sum_j (2^{js} b_j)^r)^(1/r) over blocks j = j_first, j_first + 1, ...; sup for r = inf.
double combine_blocks(std::span<const double> block_norms, int j_first, double s, double r);

struct BesovNorm {
  double value;
  BlockRange range;
};

/// Homogeneous Besov norm over the grid's BlockRange. A nonzero mean is
/// projected out with a warning. Throws InvalidArgument for an empty range.
BesovNorm besov_norm(const RealField& field, const BesovParams& params,
                     const DyadicProfile& profile);
BesovNorm besov_norm(const SpectralField& field, const BesovParams& params,
                     const DyadicProfile& profile);

struct TimedField {
  double t;
  RealField field;
};

/// Chemin-Lerner norm: L^rho in time inside the l^r sum over blocks, with
/// the time integral taken by the trapezoid rule over the samples
/// (sup in time for rho = inf).
double chemin_lerner_norm(std::span<const TimedField> series, double rho, const BesovParams& params,
                          const DyadicProfile& profile);

/// The ordinary mixed norm ||f||_{L^rho_T(B^s_{p,r})}, same quadrature.
double time_lebesgue_besov_norm(std::span<const TimedField> series, double rho,
                                const BesovParams& params, const DyadicProfile& profile);

}  // namespace fraclab
