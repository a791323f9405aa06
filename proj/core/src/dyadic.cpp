#include "fraclab/dyadic.hpp"

#include <cmath>

namespace fraclab {

namespace {
double bump_tail(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
}  // namespace

double DyadicProfile::smooth_step(double t) const {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = bump_tail(t);
  const double b = bump_tail(1.0 - t);
  return a / (a + b);
}

double DyadicProfile::cutoff(double r) const {
  if (r <= inner_) return 1.0;
  if (r >= outer_) return 0.0;
  return smooth_step((outer_ - r) / (outer_ - inner_));
}

double DyadicProfile::cutoff_complement(double r) const {
  if (r <= inner_) return 0.0;
  if (r >= outer_) return 1.0;
  return smooth_step((r - inner_) / (outer_ - inner_));
}

double DyadicProfile::block(int j, double r) const { return (*this)(std::ldexp(r, -j)); }

double DyadicProfile::low_pass(int j, double r) const { return cutoff(std::ldexp(r, -j)); }

DyadicProfile build_dyadic_profile() { return DyadicProfile{}; }

}  // namespace fraclab
