#pragma once

#include "fraclab/evolution.hpp"
#include "fraclab/grid.hpp"

namespace fraclab::sqg {

/// Dissipative surface quasi-geostrophic equation
///   d_t theta + u . grad theta + Lambda^alpha theta = 0,  u = (-R_2 theta, R_1 theta),
/// with Riesz symbols i xi_j / |xi|.

struct Velocity {
  RealField u1;
  RealField u2;
};

Velocity velocity(const RealField& theta);
/// Spectral velocity (-R_2 theta, R_1 theta).
std::pair<SpectralField, SpectralField> velocity_spectral(const SpectralField& theta);

/// -(u . grad theta), pseudo-spectral with 2/3 dealiasing.
RealField rhs(const RealField& theta);
/// Spectral form of rhs; also reports max |u| of the input.
SpectralField rhs_spectral(const SpectralField& theta, double& max_speed);

struct State {
  SpectralField theta;
  double t = 0.0;
  double alpha = 1.0;

  RealField physical() const;
};

/// One integrating-factor RK2 step. Throws CflViolation when dt max|u| n / L > cfl_limit.
State step(const State& state, double dt, double cfl_limit = 0.5);

/// Full run: seeded initial data normalized in config.smallness_norm
/// (B^{1+2/p-alpha}_{p,1} for the critical setting), norms recorded at the
/// sample times.
RunResult run(const RunConfig& config);

}  // namespace fraclab::sqg
