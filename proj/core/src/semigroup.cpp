#include "fraclab/semigroup.hpp"

#include <cmath>

#include "fraclab/error.hpp"

namespace fraclab {

namespace {
void check(double alpha, double t) {
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    throw InvalidArgument("dissipation exponent alpha must lie in (0, 2]");
  }
  if (!(t >= 0.0)) throw InvalidArgument("evolution time must be nonnegative");
}
}  // namespace

std::vector<double> linear_propagator(const Grid2D& grid, double alpha, double t) {
  check(alpha, t);
  const int n = grid.n();
  std::vector<double> factor(grid.size());
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      const double r = grid.xi_norm(i1, i2);
      factor[static_cast<std::size_t>(i1) * n + i2] = std::exp(-t * std::pow(r, alpha));
    }
  }
  return factor;
}

SpectralField evolve_linear(const SpectralField& field, double alpha, double t) {
  const auto factor = linear_propagator(field.grid(), alpha, t);
  SpectralField out = field;
  auto c = out.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= factor[i];
  return out;
}

}  // namespace fraclab
