#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "fraclab/evolution.hpp"
#include "fraclab/oracle.hpp"
#include "fraclab/semigroup.hpp"

using namespace fraclab;

namespace {
RunConfig small_config() {
  RunConfig c;
  c.grid = Grid2D(32, 2.0 * std::numbers::pi * 4.0);
  c.dt = 0.1;
  c.final_time = 2.0;
  c.sample_times = {0.25, 0.5, 1.0, 1.7, 2.0};
  c.norms = {{0.0, 2.0, 1.0}, {-1.0, 2.0, kInfinity}};
  c.initial.amplitude = 1e-2;
  return c;
}

NonlinearTerm zero_term() {
  return [](const SpectralField& v, double& speed) {
    speed = 0.0;
    return SpectralField(v.grid());
  };
}
}  // namespace

TEST(Evolution, ZeroNonlinearityReproducesTheSemigroup) {
  const RunConfig c = small_config();
  const RunResult r = run_evolution(c, zero_term(), "linear");
  const SpectralField exact = evolve_linear(r.initial_state, c.alpha, c.final_time);
  EXPECT_LE(std::sqrt(spectral_l2_squared(r.final_state - exact)),
            1e-14 * std::sqrt(spectral_l2_squared(exact)));
  ASSERT_EQ(r.series.size(), 2u);
  EXPECT_EQ(r.series[0].times, c.sample_times);
  EXPECT_EQ(r.final_time, 2.0);
  EXPECT_EQ(r.series[0].name, "B^0_{2,1}");
  EXPECT_EQ(r.series[1].name, "B^-1_{2,inf}");
}

TEST(Evolution, SecondOrderInTime) {
  // N(v) = c v: exact solution exp((c - |xi|^alpha) t) per mode.
  const double c = 0.8;
  NonlinearTerm linear_growth = [c](const SpectralField& v, double& speed) {
    speed = 0.0;
    return c * v;
  };
  RunConfig cfg = small_config();
  cfg.sample_times = {1.0};
  cfg.final_time = 1.0;
  auto error_for = [&](double dt) {
    cfg.dt = dt;
    const RunResult r = run_evolution(cfg, linear_growth, "test");
    SpectralField exact = evolve_linear(r.initial_state, cfg.alpha, 1.0);
    exact *= std::exp(c);
    return std::sqrt(spectral_l2_squared(r.final_state - exact));
  };
  const double e1 = error_for(0.1), e2 = error_for(0.05);
  EXPECT_NEAR(e1 / e2, 4.0, 0.3);
}

TEST(Evolution, CflViolationAborts) {
  const Grid2D g(16, 1.0);
  SpectralField v(g);
  v(1, 0) = 1.0;
  v(15, 0) = 1.0;
  NonlinearTerm fast = [](const SpectralField& x, double& speed) {
    speed = 100.0;
    return SpectralField(x.grid());
  };
  const auto e = linear_propagator(g, 1.0, 0.1);
  EXPECT_THROW(if_rk2_step(v, 0.1, e, fast), CflViolation);
  EXPECT_NEAR(courant_number(g, 100.0, 0.1), 160.0, 1e-12);
}

TEST(Evolution, NonFiniteStateCarriesTheLastGoodState) {
  RunConfig cfg = small_config();
  NonlinearTerm poison = [](const SpectralField& x, double& speed) {
    speed = 0.0;
    SpectralField out(x.grid());
    out(1, 1) = std::numeric_limits<double>::quiet_NaN();
    return out;
  };
  try {
    (void)run_evolution(cfg, poison, "poison");
    FAIL();
  } catch (const NonFiniteState& e) {
    EXPECT_EQ(e.time(), 0.0);
    EXPECT_EQ(e.last_good().grid(), cfg.grid);
  }
}

TEST(Evolution, SmallnessBudgetIsEnforced) {
  RunConfig cfg = small_config();
  cfg.initial.amplitude = 0.5;
  cfg.smallness_budget = 0.1;
  EXPECT_THROW(run_evolution(cfg, zero_term(), "linear"), InvalidArgument);
}

TEST(Evolution, ConfigValidation) {
  RunConfig cfg = small_config();
  cfg.sample_times = {0.5, 0.4};
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg = small_config();
  cfg.sample_times = {3.0};
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg = small_config();
  cfg.dt = 0.0;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
}

TEST(Evolution, HashIsStableAndSensitive) {
  RunConfig a = small_config();
  RunConfig b = small_config();
  EXPECT_EQ(describe(a), describe(b));
  b.initial.seed = 2;
  EXPECT_NE(fnv1a_hex(describe(a)), fnv1a_hex(describe(b)));
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}

TEST(Evolution, LebesgueSeriesFollowBesovSeries) {
  RunConfig cfg = small_config();
  cfg.lebesgue_norms = {2.0, kInfinity};
  const RunResult r = run_evolution(cfg, zero_term(), "linear");
  ASSERT_EQ(r.series.size(), 4u);
  EXPECT_EQ(r.series[2].name, "L^2");
  EXPECT_EQ(r.series[3].name, "L^inf");
  EXPECT_EQ(r.initial_norms.size(), 4u);
}
