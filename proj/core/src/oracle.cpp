#include "fraclab/oracle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "fraclab/error.hpp"
#include "fraclab/parallel.hpp"
#include "fraclab/quadrature.hpp"

namespace fraclab {

namespace {

constexpr double kTruncation = 1e-14;
constexpr int kMaxDescent = 2000;
// exp(-r^2/(2 sigma^2)) underflows well before r = 40 sigma.
constexpr double kGaussianReach = 40.0;

void check_dimension(int dimension) {
  if (dimension < 1) throw InvalidArgument("density dimension must be >= 1");
}

void check_flow(double alpha, double t) {
  if (!(alpha > 0.0 && alpha <= 2.0)) throw InvalidArgument("alpha must lie in (0, 2]");
  if (!(t >= 0.0)) throw InvalidArgument("time must be nonnegative");
}

// Integral over r of weight(r) exp(-2 t r^alpha) rho(r)^2 r^{n-1} on
// [2^j x_lo, 2^j x_hi] clipped to the density support, computed in the scaled
// variable r = 2^j x so that every block sees the same quadrature nodes.
template <class Weight>
double shell_integral(const RadialSpectralDensity& density, int j, double x_lo, double x_hi,
                      double t, double alpha, Weight&& weight) {
  const double scale = std::ldexp(1.0, j);
  const double lo = std::max(x_lo, density.support_lo() / scale);
  const double hi = std::min(x_hi, density.support_hi() / scale);
  if (!(hi > lo)) return 0.0;
  const int n = density.dimension();
  auto integrand = [&](double x) {
    const double r = scale * x;
    const double rho = density(r);
    if (rho == 0.0) return 0.0;
    const double w = weight(x);
    if (w == 0.0) return 0.0;
    return w * std::exp(-2.0 * t * std::pow(r, alpha)) * rho * rho * std::pow(r, n - 1) * scale;
  };
  const QuadratureResult q = adaptive_simpson(integrand, lo, hi);
  if (!q.converged) {
    std::ostringstream msg;
    msg << "oracle quadrature did not converge for block " << j << " at t = " << t
        << " (value " << q.value << ", error estimate " << q.error_estimate << ")";
    throw NumericalAbort(msg.str());
  }
  const double prefactor =
      std::pow(2.0 * std::numbers::pi, -n) * unit_sphere_measure(n);
  return prefactor * q.value;
}

int top_block(const RadialSpectralDensity& density, const DyadicProfile& profile) {
  const double hi = density.support_hi();
  int j = static_cast<int>(std::ceil(std::log2(hi))) + 2;
  while (std::ldexp(profile.shell_inner(), j) >= hi) --j;
  return j;
}

bool below_support(const RadialSpectralDensity& density, const DyadicProfile& profile, int j) {
  return std::ldexp(profile.shell_outer(), j) <= density.support_lo();
}

}  // namespace

RadialSpectralDensity::RadialSpectralDensity(int dimension, DensityForm form, double a, double b,
                                             double c)
    : dimension_(dimension), form_(form), a_(a), b_(b), c_(c) {
  check_dimension(dimension);
}

RadialSpectralDensity RadialSpectralDensity::ball_indicator(int dimension, double radius) {
  if (!(radius > 0.0 && std::isfinite(radius))) throw InvalidArgument("ball radius must be > 0");
  return {dimension, DensityForm::ball_indicator, radius, 0.0, 0.0};
}

RadialSpectralDensity RadialSpectralDensity::power_law(int dimension, double exponent,
                                                       double r_lo, double r_hi) {
  if (!(r_lo > 0.0 && r_hi > r_lo && std::isfinite(r_hi) && std::isfinite(exponent))) {
    throw InvalidArgument("power_law requires finite exponent and 0 < r_lo < r_hi");
  }
  return {dimension, DensityForm::power_law, exponent, r_lo, r_hi};
}

RadialSpectralDensity RadialSpectralDensity::gaussian(int dimension, double sigma) {
  if (!(sigma > 0.0 && std::isfinite(sigma))) throw InvalidArgument("gaussian sigma must be > 0");
  return {dimension, DensityForm::gaussian, sigma, 0.0, 0.0};
}

double RadialSpectralDensity::operator()(double r) const {
  switch (form_) {
    case DensityForm::ball_indicator:
      return r <= a_ ? 1.0 : 0.0;
    case DensityForm::power_law:
      return (r >= b_ && r <= c_) ? std::pow(r, a_) : 0.0;
    case DensityForm::gaussian:
      return std::exp(-r * r / (2.0 * a_ * a_));
  }
  return 0.0;
}

double RadialSpectralDensity::support_lo() const {
  return form_ == DensityForm::power_law ? b_ : 0.0;
}

double RadialSpectralDensity::support_hi() const {
  switch (form_) {
    case DensityForm::ball_indicator:
      return a_;
    case DensityForm::power_law:
      return c_;
    case DensityForm::gaussian:
      return kGaussianReach * a_;
  }
  return 0.0;
}

double unit_sphere_measure(int dimension) {
  check_dimension(dimension);
  const double half = 0.5 * dimension;
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

double oracle_block_norm(const RadialSpectralDensity& density, int j, double t, double alpha,
                         const DyadicProfile& profile) {
  check_flow(alpha, t);
  const double value =
      shell_integral(density, j, profile.shell_inner(), profile.shell_outer(), t, alpha,
                     [&](double x) {
                       const double w = profile(x);
                       return w * w;
                     });
  return std::sqrt(value);
}

double oracle_adjacent_block_inner(const RadialSpectralDensity& density, int j, double t,
                                   double alpha, const DyadicProfile& profile) {
  check_flow(alpha, t);
  // Overlap of the shells of blocks j and j + 1, in units of 2^j.
  return shell_integral(density, j, 2.0 * profile.shell_inner(), profile.shell_outer(), t, alpha,
                        [&](double x) { return profile(x) * profile(0.5 * x); });
}

double oracle_l2_norm(const RadialSpectralDensity& density, double t, double alpha,
                      const DyadicProfile& profile) {
  check_flow(alpha, t);
  double total = 0.0;
  double previous = 0.0;
  const int top = top_block(density, profile);
  for (int j = top; j > top - kMaxDescent; --j) {
    if (below_support(density, profile, j)) return std::sqrt(total);
    const double b = oracle_block_norm(density, j, t, alpha, profile);
    const double term = b * b + 2.0 * oracle_adjacent_block_inner(density, j, t, alpha, profile);
    total += term;
    if (total > 0.0 && term < kTruncation * total && term < previous) return std::sqrt(total);
    previous = term;
  }
  throw NumericalAbort("oracle_l2_norm: block sum did not converge");
}

double oracle_besov_norm(const RadialSpectralDensity& density, const DecayClaim& claim,
                         OracleNorm norm, double t, const DyadicProfile& profile) {
  check_flow(claim.alpha, t);
  const int top = top_block(density, profile);
  double total = 0.0;
  double previous = 0.0;
  for (int j = top; j > top - kMaxDescent; --j) {
    if (below_support(density, profile, j)) return total;
    const double b = oracle_block_norm(density, j, t, claim.alpha, profile);
    if (norm == OracleNorm::decay) {
      const double term = std::exp2(j * claim.ell) * b;
      total += term;
      if (total > 0.0 && term < kTruncation * total && term < previous) return total;
      previous = term;
    } else {
      const double term = std::exp2(-j * claim.s) * b;
      total = std::max(total, term);
      if (term > 0.0 && term < previous && term < kTruncation * total) return total;
      if (term > 0.0 && std::abs(term - previous) <= kTruncation * term) return total;
      previous = term;
    }
  }
  std::ostringstream msg;
  msg << "oracle Besov sum did not converge within " << kMaxDescent << " blocks at t = " << t
      << " (data not in the requested space?)";
  throw NumericalAbort(msg.str());
}

NormSeries oracle_besov_series(const RadialSpectralDensity& density, const DecayClaim& claim,
                               OracleNorm norm, std::span<const double> times,
                               const DyadicProfile& profile) {
  NormSeries series;
  series.name = norm == OracleNorm::decay ? "decay" : "bounded";
  std::ostringstream desc;
  if (norm == OracleNorm::decay) {
    desc << "oracle B^" << claim.ell << "_{2,1}";
  } else {
    desc << "oracle B^" << -claim.s << "_{2,inf}";
  }
  desc << " alpha=" << claim.alpha;
  series.descriptor = desc.str();
  series.times.assign(times.begin(), times.end());
  series.values.resize(times.size());
  parallel_for(times.size(), [&](std::size_t i) {
    series.values[i] = oracle_besov_norm(density, claim, norm, times[i], profile);
  });
  series.validate();
  return series;
}

SpectralField discretize_density(const Grid2D& grid, const RadialSpectralDensity& density) {
  if (density.dimension() != 2) throw InvalidArgument("discretize_density requires dimension 2");
  SpectralField out(grid);
  const int n = grid.n();
  const double scale = 1.0 / (grid.length() * grid.length());
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) out(i1, i2) = scale * density(grid.xi_norm(i1, i2));
  }
  out(0, 0) = 0.0;
  return out;
}

std::vector<double> log_spaced_times(double t_lo, double t_hi, int per_decade) {
  if (!(t_lo > 0.0 && t_hi > t_lo) || per_decade < 1) {
    throw InvalidArgument("log_spaced_times requires 0 < t_lo < t_hi and per_decade >= 1");
  }
  const double decades = std::log10(t_hi / t_lo);
  const int intervals = std::max(1, static_cast<int>(std::ceil(decades * per_decade - 1e-9)));
  std::vector<double> times(intervals + 1);
  for (int i = 0; i <= intervals; ++i) {
    times[i] = t_lo * std::pow(10.0, decades * i / intervals);
  }
  times.front() = t_lo;
  times.back() = t_hi;
  return times;
}

}  // namespace fraclab
