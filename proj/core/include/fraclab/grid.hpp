#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fraclab {

using Complex = std::complex<double>;

/// Uniform n x n periodic grid on [0, L)^2.
///
/// Point (i1, i2) sits at x = (i1 h, i2 h), h = L/n, and is stored at flat
/// index i1 * n + i2. Spectral arrays use the same layout in FFT order: array
/// index i maps to the integer wavenumber i for i < n/2 and i - n otherwise,
/// so wavenumbers cover [-n/2, n/2). The angular wavevector of k is
/// xi_k = 2 pi k / L.
class Grid2D {
 public:
  /// Throws InvalidArgument unless n is a power of two >= 8 and L > 0.
  Grid2D(int n, double length);

  int n() const { return n_; }
  double length() const { return length_; }
  double spacing() const { return length_ / n_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * n_; }

  /// Integer wavenumber for an FFT-ordered array index.
  int wavenumber(int index) const { return index < n_ / 2 ? index : index - n_; }
  /// Angular wavenumber 2 pi k / L for an FFT-ordered array index.
  double xi(int index) const;
  /// |xi_k| at flat index i1 * n + i2.
  double xi_norm(int i1, int i2) const;

  /// Smallest nonzero resolvable wavenumber, 2 pi / L.
  double xi_min() const;
  /// Nyquist wavenumber pi n / L.
  double xi_nyquist() const;
  /// Largest |xi| kept by the 2/3-rule truncation (corner of the retained square).
  double xi_dealiased_max() const;

  friend bool operator==(const Grid2D&, const Grid2D&) = default;

 private:
  int n_;
  double length_;
};

/// Real scalar field sampled on a Grid2D, row-major.
class RealField {
 public:
  explicit RealField(Grid2D grid);  // zero-initialized
  RealField(Grid2D grid, std::vector<double> values);

  const Grid2D& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  double& operator()(int i1, int i2) { return values_[index(i1, i2)]; }
  double operator()(int i1, int i2) const { return values_[index(i1, i2)]; }

  /// Throws InvalidArgument naming the first non-finite entry.
  void require_finite() const;
  /// Mean value (1/n^2) sum f.
  double mean() const;
  /// Integral h^2 sum f over the torus.
  double integral() const;

 private:
  std::size_t index(int i1, int i2) const {
    return static_cast<std::size_t>(i1) * grid_.n() + i2;
  }
  Grid2D grid_;
  std::vector<double> values_;
};

/// Fourier coefficients of a real field, normalized so that
/// f(x) = sum_k c_k exp(i xi_k . x).
class SpectralField {
 public:
  explicit SpectralField(Grid2D grid);  // zero-initialized
  SpectralField(Grid2D grid, std::vector<Complex> coefficients);

  const Grid2D& grid() const { return grid_; }
  std::span<const Complex> coefficients() const { return coeffs_; }
  std::span<Complex> coefficients() { return coeffs_; }
  Complex& operator()(int i1, int i2) { return coeffs_[index(i1, i2)]; }
  const Complex& operator()(int i1, int i2) const { return coeffs_[index(i1, i2)]; }

  /// Coefficient addressed by signed wavenumbers (k1, k2) in [-n/2, n/2).
  Complex& at_wavenumber(int k1, int k2);
  const Complex& at_wavenumber(int k1, int k2) const;

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(double factor);

 private:
  std::size_t index(int i1, int i2) const {
    return static_cast<std::size_t>(i1) * grid_.n() + i2;
  }
  Grid2D grid_;
  std::vector<Complex> coeffs_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double factor, SpectralField a);

/// Largest |c_k - conj(c_{-k})| over all k, relative to the largest |c_k|.
double hermitian_defect(const SpectralField& field);

/// Sum of |c_k|^2 weighted by L^2; equals the squared L^2 norm of the field.
double spectral_l2_squared(const SpectralField& field);

/// Throws InvalidArgument if the two grids differ.
void require_same_grid(const Grid2D& a, const Grid2D& b, const char* what);

}  // namespace fraclab
