#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fraclab/besov.hpp"
#include "fraclab/error.hpp"
#include "fraclab/oracle.hpp"
#include "fraclab/semigroup.hpp"
#include "oracles.hpp"

using namespace fraclab;

namespace {
const DyadicProfile kProfile;
const RadialSpectralDensity kBall = RadialSpectralDensity::ball_indicator(2, 1.0);
}  // namespace

TEST(Oracle, SphereMeasure) {
  EXPECT_NEAR(unit_sphere_measure(1), 2.0, 1e-15);
  EXPECT_NEAR(unit_sphere_measure(2), 2.0 * std::numbers::pi, 1e-14);
  EXPECT_NEAR(unit_sphere_measure(3), 4.0 * std::numbers::pi, 1e-14);
}

TEST(Oracle, BlockNormMatchesRiemannReference) {
  for (double alpha : {1.0, 2.0}) {
    for (double t : {0.0, 0.7, 5.0}) {
      for (int j = -5; j <= 0; ++j) {
        const double q = oracle_block_norm(kBall, j, t, alpha, kProfile);
        const double ref = reference::riemann_ball_block_norm(1.0, j, t, alpha);
        EXPECT_NEAR(q, ref, 1e-6 * ref) << "alpha " << alpha << " t " << t << " j " << j;
      }
    }
  }
}

TEST(Oracle, L2NormClosedForm) {
  // alpha = 2, unit ball: ||u(t)||^2 = (2 pi)^-2 pi (1 - e^{-2t}) / (2t).
  for (double t : {0.25, 1.0, 3.0, 10.0}) {
    const double expected =
        std::sqrt(std::pow(2.0 * std::numbers::pi, -2) * std::numbers::pi * (1.0 - std::exp(-2.0 * t)) / (2.0 * t));
    EXPECT_NEAR(oracle_l2_norm(kBall, t, 2.0, kProfile), expected, 1e-9 * expected) << t;
  }
  EXPECT_NEAR(oracle_l2_norm(kBall, 0.0, 2.0, kProfile), std::sqrt(0.25 / std::numbers::pi), 1e-9);
}

TEST(Oracle, DecaySlopeAlphaTwo) {
  DecayClaim claim;
  claim.alpha = 2.0;
  const auto times = log_spaced_times(10.0, 1e4, 40);
  const NormSeries s = oracle_besov_series(kBall, claim, OracleNorm::decay, times, kProfile);
  const FitResult fit = fit_decay_slope(s, {10.0, 1e4});
  EXPECT_NEAR(fit.slope, -0.5, 0.02 * 0.5);
}

TEST(Oracle, BoundedSeriesIsNonincreasing) {
  DecayClaim claim;
  const auto times = log_spaced_times(0.01, 1e3, 10);
  const NormSeries s = oracle_besov_series(kBall, claim, OracleNorm::bounded, times, kProfile);
  for (std::size_t i = 1; i < s.values.size(); ++i) {
    EXPECT_LE(s.values[i], s.values[i - 1] * (1.0 + 1e-12)) << s.times[i];
  }
}

TEST(Oracle, BlocksAgreeAcrossScalesOnThePlateau) {
  // Far below the ball radius every block integrand is the same function of
  // the scaled variable, so 2^{-j} ||Delta_j u_0|| is constant to rounding.
  const double ref = std::ldexp(oracle_block_norm(kBall, -10, 0.0, 1.0, kProfile), 10);
  for (int j = -30; j <= -3; ++j) {
    EXPECT_NEAR(std::ldexp(oracle_block_norm(kBall, j, 0.0, 1.0, kProfile), -j), ref, 1e-14 * ref);
  }
}

TEST(Oracle, GridDiscretizationMatchesContinuum) {
  // xi_min = 1/64 resolves the low-frequency mass that dominates at t = 3.
  const Grid2D grid(256, 2.0 * std::numbers::pi * 64.0);
  const auto gauss = RadialSpectralDensity::gaussian(2, 0.3);
  const SpectralField u0 = discretize_density(grid, gauss);
  DecayClaim claim;
  claim.ell = 1.0;
  for (double t : {0.1, 1.0, 3.0}) {
    const double grid_norm = besov_norm(evolve_linear(u0, 1.0, t), {1.0, 2.0, 1.0}, kProfile).value;
    const double oracle = oracle_besov_norm(gauss, claim, OracleNorm::decay, t, kProfile);
    EXPECT_NEAR(grid_norm, oracle, 0.01 * oracle) << t;
  }
}

TEST(Oracle, DensityValidation) {
  EXPECT_THROW(RadialSpectralDensity::ball_indicator(0, 1.0), InvalidArgument);
  EXPECT_THROW(RadialSpectralDensity::ball_indicator(2, -1.0), InvalidArgument);
  EXPECT_THROW(RadialSpectralDensity::power_law(2, 1.0, 2.0, 1.0), InvalidArgument);
  EXPECT_THROW(RadialSpectralDensity::gaussian(2, 0.0), InvalidArgument);
  EXPECT_THROW(oracle_block_norm(kBall, 0, -1.0, 1.0, kProfile), InvalidArgument);
}

TEST(Oracle, PowerLawBlockScaling) {
  // rho = r^a on a wide band: block norms scale by 2^{j(a + 1)} inside it.
  const auto pl = RadialSpectralDensity::power_law(2, -0.5, 1e-6, 1e6);
  const double b0 = oracle_block_norm(pl, 0, 0.0, 1.0, kProfile);
  const double b3 = oracle_block_norm(pl, 3, 0.0, 1.0, kProfile);
  EXPECT_NEAR(b3 / b0, std::pow(2.0, 3 * 0.5), 1e-9);
}

TEST(Oracle, LogSpacedTimes) {
  const auto t = log_spaced_times(10.0, 1e4, 40);
  ASSERT_EQ(t.size(), 121u);
  EXPECT_EQ(t.front(), 10.0);
  EXPECT_EQ(t.back(), 1e4);
  EXPECT_NEAR(t[40], 100.0, 1e-10);
  EXPECT_THROW(log_spaced_times(1.0, 1.0, 4), InvalidArgument);
}
