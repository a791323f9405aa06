#include "fraclab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fraclab/error.hpp"

namespace fraclab {

Grid2D::Grid2D(int n, double length) : n_(n), length_(length) {
  if (n < 8 || (n & (n - 1)) != 0) {
    throw InvalidArgument("grid size n must be a power of two >= 8, got " + std::to_string(n));
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw InvalidArgument("grid length L must be positive and finite");
  }
}

double Grid2D::xi(int index) const {
  return 2.0 * std::numbers::pi * wavenumber(index) / length_;
}

double Grid2D::xi_norm(int i1, int i2) const { return std::hypot(xi(i1), xi(i2)); }

double Grid2D::xi_min() const { return 2.0 * std::numbers::pi / length_; }

double Grid2D::xi_nyquist() const { return std::numbers::pi * n_ / length_; }

double Grid2D::xi_dealiased_max() const {
  return std::sqrt(2.0) * xi_min() * static_cast<double>(n_ / 3);
}

RealField::RealField(Grid2D grid) : grid_(grid), values_(grid.size(), 0.0) {}

RealField::RealField(Grid2D grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw InvalidArgument("RealField: expected " + std::to_string(grid_.size()) +
                          " values, got " + std::to_string(values_.size()));
  }
}

void RealField::require_finite() const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      std::ostringstream msg;
      msg << "non-finite value " << values_[i] << " at index " << i << " (i1=" << i / grid_.n()
          << ", i2=" << i % grid_.n() << ")";
      throw InvalidArgument(msg.str());
    }
  }
}

double RealField::mean() const {
  double sum = 0.0;
  for (double v : values_) sum += v;
  return sum / static_cast<double>(values_.size());
}

double RealField::integral() const {
  const double h = grid_.spacing();
  double sum = 0.0;
  for (double v : values_) sum += v;
  return h * h * sum;
}

SpectralField::SpectralField(Grid2D grid) : grid_(grid), coeffs_(grid.size()) {}

SpectralField::SpectralField(Grid2D grid, std::vector<Complex> coefficients)
    : grid_(grid), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != grid_.size()) {
    throw InvalidArgument("SpectralField: expected " + std::to_string(grid_.size()) +
                          " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

namespace {
int wrap(int k, int n) { return ((k % n) + n) % n; }
}  // namespace

Complex& SpectralField::at_wavenumber(int k1, int k2) {
  return coeffs_[index(wrap(k1, grid_.n()), wrap(k2, grid_.n()))];
}

const Complex& SpectralField::at_wavenumber(int k1, int k2) const {
  return coeffs_[index(wrap(k1, grid_.n()), wrap(k2, grid_.n()))];
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  require_same_grid(grid_, other.grid_, "SpectralField addition");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  require_same_grid(grid_, other.grid_, "SpectralField subtraction");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator*=(double factor) {
  for (auto& c : coeffs_) c *= factor;
  return *this;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double factor, SpectralField a) { return a *= factor; }

double hermitian_defect(const SpectralField& field) {
  const int n = field.grid().n();
  double defect = 0.0;
  double scale = 0.0;
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      const Complex c = field(i1, i2);
      const Complex partner = field((n - i1) % n, (n - i2) % n);
      defect = std::max(defect, std::abs(c - std::conj(partner)));
      scale = std::max(scale, std::abs(c));
    }
  }
  return scale > 0.0 ? defect / scale : 0.0;
}

double spectral_l2_squared(const SpectralField& field) {
  double sum = 0.0;
  for (const auto& c : field.coefficients()) sum += std::norm(c);
  const double length = field.grid().length();
  return length * length * sum;
}

void require_same_grid(const Grid2D& a, const Grid2D& b, const char* what) {
  if (!(a == b)) {
    std::ostringstream msg;
    msg << what << ": grid mismatch (n=" << a.n() << ", L=" << a.length() << " vs n=" << b.n()
        << ", L=" << b.length() << ")";
    throw InvalidArgument(msg.str());
  }
}

}  // namespace fraclab
