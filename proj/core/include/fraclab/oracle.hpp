#pragma once

#include <span>
#include <vector>

#include "fraclab/decay.hpp"
#include "fraclab/dyadic.hpp"
#include "fraclab/grid.hpp"

namespace fraclab {

enum class DensityForm { ball_indicator, power_law, gaussian };

/// Radial spectral amplitude |u0^(xi)| = rho(|xi|) of whole-space initial data
/// in a given dimension.
class RadialSpectralDensity {
 public:
  /// rho = 1 on [0, radius].
  static RadialSpectralDensity ball_indicator(int dimension, double radius);
  /// rho = r^exponent on [r_lo, r_hi], 0 elsewhere. Requires 0 < r_lo < r_hi.
  static RadialSpectralDensity power_law(int dimension, double exponent, double r_lo, double r_hi);
  /// rho = exp(-r^2 / (2 sigma^2)).
  static RadialSpectralDensity gaussian(int dimension, double sigma);

  int dimension() const { return dimension_; }
  DensityForm form() const { return form_; }
  double operator()(double r) const;

  /// rho vanishes (to double precision for the gaussian) outside [lo, hi].
  double support_lo() const;
  double support_hi() const;

  double radius() const { return a_; }
  double exponent() const { return a_; }
  double r_lo() const { return b_; }
  double r_hi() const { return c_; }
  double sigma() const { return a_; }

 private:
  RadialSpectralDensity(int dimension, DensityForm form, double a, double b, double c);
  int dimension_;
  DensityForm form_;
  double a_, b_, c_;
};

/// Surface measure of the unit sphere in R^dimension.
double unit_sphere_measure(int dimension);

/// ||Delta_j u(t)||_{L^2} for u(t) = exp(-t Lambda^alpha) u0, by Plancherel:
/// ((2 pi)^-n |S^{n-1}| int phi(2^-j r)^2 exp(-2 t r^alpha) rho(r)^2 r^{n-1} dr)^(1/2),
/// with adaptive Simpson to relative accuracy 1e-9. Throws NumericalAbort if
/// the quadrature budget is exhausted.
double oracle_block_norm(const RadialSpectralDensity& density, int j, double t, double alpha,
                         const DyadicProfile& profile);

/// <Delta_j u(t), Delta_{j+1} u(t)>_{L^2}.
double oracle_adjacent_block_inner(const RadialSpectralDensity& density, int j, double t,
                                   double alpha, const DyadicProfile& profile);

/// ||u(t)||_{L^2} reassembled from blocks: sum_j ||Delta_j u||^2 + 2 <Delta_j u, Delta_{j+1} u>.
double oracle_l2_norm(const RadialSpectralDensity& density, double t, double alpha,
                      const DyadicProfile& profile);

enum class OracleNorm {
  decay,    // sum_j 2^{j ell} ||Delta_j u||_{L^2}   (B^ell_{2,1})
  bounded,  // sup_j 2^{-j s} ||Delta_j u||_{L^2}    (B^-s_{2,inf})
};

/// Besov norm of the linear flow at one time. The j-sum starts at the top of
/// the density support and descends until terms fall below 1e-14 of the
/// running total (decay) or the supremum stops changing at that level (bounded).
double oracle_besov_norm(const RadialSpectralDensity& density, const DecayClaim& claim,
                         OracleNorm norm, double t, const DyadicProfile& profile);

/// oracle_besov_norm at each time (positive, increasing), evaluated in parallel.
NormSeries oracle_besov_series(const RadialSpectralDensity& density, const DecayClaim& claim,
                               OracleNorm norm, std::span<const double> times,
                               const DyadicProfile& profile);

/// Torus sampling of a two-dimensional density: c_k = rho(|xi_k|) / L^2 with
/// the k = 0 mode removed. Matches the continuum block norms while the
/// density is negligible below xi_min and above the Nyquist radius.
SpectralField discretize_density(const Grid2D& grid, const RadialSpectralDensity& density);

/// count points per decade, log-spaced over [t_lo, t_hi] inclusive.
std::vector<double> log_spaced_times(double t_lo, double t_hi, int per_decade);

}  // namespace fraclab
