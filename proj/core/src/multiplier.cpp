#include "fraclab/multiplier.hpp"

#include <cmath>

#include "fraclab/error.hpp"

namespace fraclab {

namespace {

constexpr double kInverseMeanTolerance = 1e-10;

void check_component(int component) {
  if (component != 1 && component != 2) {
    throw InvalidArgument("multiplier component must be 1 or 2, got " + std::to_string(component));
  }
}

bool is_odd(MultiplierKind kind) {
  return kind == MultiplierKind::riesz || kind == MultiplierKind::partial;
}

bool is_inverse(MultiplierKind kind) {
  return kind == MultiplierKind::inverse_laplacian || kind == MultiplierKind::inverse_lambda;
}

}  // namespace

MultiplierSpec MultiplierSpec::fractional_laplacian(double alpha) {
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    throw InvalidArgument("fractional_laplacian requires alpha in (0, 2], got " +
                          std::to_string(alpha));
  }
  return {MultiplierKind::fractional_laplacian, alpha, 0};
}

MultiplierSpec MultiplierSpec::riesz(int component) {
  check_component(component);
  return {MultiplierKind::riesz, 0.0, component};
}

MultiplierSpec MultiplierSpec::partial(int component) {
  check_component(component);
  return {MultiplierKind::partial, 0.0, component};
}

Complex symbol(const MultiplierSpec& spec, double xi1, double xi2) {
  const double norm = std::hypot(xi1, xi2);
  const double xc = spec.component == 1 ? xi1 : xi2;
  switch (spec.kind) {
    case MultiplierKind::fractional_laplacian:
      return std::pow(norm, spec.alpha);
    case MultiplierKind::inverse_laplacian:
      return 1.0 / (norm * norm);
    case MultiplierKind::riesz:
      return Complex(0.0, xc / norm);
    case MultiplierKind::partial:
      return Complex(0.0, xc);
    case MultiplierKind::inverse_lambda:
      return 1.0 / norm;
  }
  return 0.0;
}

SpectralField apply_fourier_multiplier(const SpectralField& field, const MultiplierSpec& spec) {
  if (spec.kind == MultiplierKind::fractional_laplacian) {
    (void)MultiplierSpec::fractional_laplacian(spec.alpha);
  }
  if (is_odd(spec.kind)) check_component(spec.component);
  if (is_inverse(spec.kind) && std::abs(field(0, 0)) > kInverseMeanTolerance) {
    throw InvalidArgument("nonzero mean under inverse operator");
  }
  const Grid2D& grid = field.grid();
  const int n = grid.n();
  const int nyquist = n / 2;
  SpectralField out(grid);
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      if (i1 == 0 && i2 == 0) continue;
      if (is_odd(spec.kind) && (spec.component == 1 ? i1 : i2) == nyquist) continue;
      out(i1, i2) = field(i1, i2) * symbol(spec, grid.xi(i1), grid.xi(i2));
    }
  }
  return out;
}

SpectralField dealias(SpectralField field) {
  const Grid2D& grid = field.grid();
  const int n = grid.n();
  const int cutoff = n / 3;
  for (int i1 = 0; i1 < n; ++i1) {
    const bool row_out = std::abs(grid.wavenumber(i1)) > cutoff;
    for (int i2 = 0; i2 < n; ++i2) {
      if (row_out || std::abs(grid.wavenumber(i2)) > cutoff) field(i1, i2) = 0.0;
    }
  }
  return field;
}

bool is_dealiased(const SpectralField& field) {
  const Grid2D& grid = field.grid();
  const int n = grid.n();
  const int cutoff = n / 3;
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      const bool outside =
          std::abs(grid.wavenumber(i1)) > cutoff || std::abs(grid.wavenumber(i2)) > cutoff;
      if (outside && field(i1, i2) != Complex(0.0)) return false;
    }
  }
  return true;
}

}  // namespace fraclab
