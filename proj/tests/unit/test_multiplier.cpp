#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fraclab/error.hpp"
#include "fraclab/fft.hpp"
#include "fraclab/multiplier.hpp"
#include "oracles.hpp"

using namespace fraclab;

namespace {
const Grid2D kGrid(32, 2.0 * std::numbers::pi);

double l2(const SpectralField& f) { return std::sqrt(spectral_l2_squared(f)); }
}  // namespace

TEST(Multiplier, SymbolTable) {
  EXPECT_DOUBLE_EQ(symbol(MultiplierSpec::fractional_laplacian(1.0), 3.0, 4.0).real(), 5.0);
  EXPECT_DOUBLE_EQ(symbol(MultiplierSpec::fractional_laplacian(2.0), 3.0, 4.0).real(), 25.0);
  EXPECT_DOUBLE_EQ(symbol(MultiplierSpec::inverse_laplacian(), 3.0, 4.0).real(), 1.0 / 25.0);
  EXPECT_DOUBLE_EQ(symbol(MultiplierSpec::riesz(1), 3.0, 4.0).imag(), 0.6);
  EXPECT_DOUBLE_EQ(symbol(MultiplierSpec::riesz(2), 3.0, 4.0).imag(), 0.8);
  EXPECT_DOUBLE_EQ(symbol(MultiplierSpec::partial(2), 3.0, 4.0).imag(), 4.0);
  EXPECT_DOUBLE_EQ(symbol(MultiplierSpec::inverse_lambda(), 3.0, 4.0).real(), 0.2);
}

TEST(Multiplier, RejectsBadParameters) {
  EXPECT_THROW(MultiplierSpec::fractional_laplacian(0.0), InvalidArgument);
  EXPECT_THROW(MultiplierSpec::fractional_laplacian(2.5), InvalidArgument);
  EXPECT_THROW(MultiplierSpec::riesz(3), InvalidArgument);
  EXPECT_THROW(MultiplierSpec::partial(0), InvalidArgument);
}

TEST(Multiplier, InverseRequiresZeroMean) {
  SpectralField f = reference::lcg_spectrum(kGrid, 1, 8);
  f(0, 0) = 0.5;
  try {
    (void)apply_fourier_multiplier(f, MultiplierSpec::inverse_laplacian());
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_STREQ(e.what(), "nonzero mean under inverse operator");
  }
  EXPECT_THROW(apply_fourier_multiplier(f, MultiplierSpec::inverse_lambda()), InvalidArgument);
  f(0, 0) = 0.0;
  EXPECT_NO_THROW(apply_fourier_multiplier(f, MultiplierSpec::inverse_laplacian()));
}

TEST(Multiplier, ZeroModeAlwaysMapsToZero) {
  SpectralField f(kGrid);
  f(0, 0) = 2.0;
  EXPECT_EQ(apply_fourier_multiplier(f, MultiplierSpec::fractional_laplacian(1.0))(0, 0),
            Complex(0.0));
}

TEST(Multiplier, PartialDerivativeOfSineIsExact) {
  RealField f(kGrid);
  const double h = kGrid.spacing();
  for (int i = 0; i < 32; ++i) {
    for (int j = 0; j < 32; ++j) f(i, j) = std::sin(3.0 * h * i) * std::cos(5.0 * h * j);
  }
  const RealField d1 = inverse_transform(apply_fourier_multiplier(forward_transform(f), MultiplierSpec::partial(1)));
  for (int i = 0; i < 32; ++i) {
    for (int j = 0; j < 32; ++j) {
      EXPECT_NEAR(d1(i, j), 3.0 * std::cos(3.0 * h * i) * std::cos(5.0 * h * j), 1e-12);
    }
  }
}

TEST(Multiplier, CompositionAndInverses) {
  const SpectralField f = reference::lcg_spectrum(kGrid, 2, 10);
  const auto lap = MultiplierSpec::fractional_laplacian(2.0);
  const SpectralField back =
      apply_fourier_multiplier(apply_fourier_multiplier(f, lap), MultiplierSpec::inverse_laplacian());
  EXPECT_LE(l2(back - f), 1e-13 * l2(f));
  const SpectralField lam = apply_fourier_multiplier(
      apply_fourier_multiplier(f, MultiplierSpec::fractional_laplacian(1.0)),
      MultiplierSpec::inverse_lambda());
  EXPECT_LE(l2(lam - f), 1e-13 * l2(f));
}

TEST(Multiplier, RieszSquaresSumToMinusIdentity) {
  const SpectralField f = reference::lcg_spectrum(kGrid, 4, 10);
  SpectralField s = apply_fourier_multiplier(apply_fourier_multiplier(f, MultiplierSpec::riesz(1)),
                                             MultiplierSpec::riesz(1));
  s += apply_fourier_multiplier(apply_fourier_multiplier(f, MultiplierSpec::riesz(2)),
                                MultiplierSpec::riesz(2));
  s += f;
  EXPECT_LE(l2(s), 1e-14 * l2(f));
}

TEST(Multiplier, OddSymbolsKeepFieldsReal) {
  const SpectralField f = reference::lcg_spectrum(kGrid, 5, 15);
  for (const auto spec : {MultiplierSpec::riesz(1), MultiplierSpec::riesz(2),
                          MultiplierSpec::partial(1), MultiplierSpec::partial(2)}) {
    EXPECT_LE(hermitian_defect(apply_fourier_multiplier(f, spec)), 1e-15);
  }
}

TEST(Multiplier, DealiasTwoThirdsRule) {
  SpectralField f(kGrid);
  for (auto& c : f.coefficients()) c = 1.0;
  const SpectralField d = dealias(f);
  EXPECT_TRUE(is_dealiased(d));
  EXPECT_FALSE(is_dealiased(f));
  // n = 32: |k| <= 10 kept, 11 dropped.
  EXPECT_EQ(d.at_wavenumber(10, -10), Complex(1.0));
  EXPECT_EQ(d.at_wavenumber(11, 0), Complex(0.0));
  EXPECT_EQ(d.at_wavenumber(0, -11), Complex(0.0));
}
