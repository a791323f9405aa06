#pragma once

#include "fraclab/evolution.hpp"
#include "fraclab/grid.hpp"

namespace fraclab::ks {

// Fractional Keller-Segel system on the torus:
//   d_t u + Lambda^alpha u + div(u grad psi) = 0,  -Lap psi = u - mean(u).
// The mean of u is conserved and excluded from the potential.

/// psi = (-Lap)^-1 (u - mean u); zero mean.
RealField potential(const RealField& u);
SpectralField potential_spectral(const SpectralField& u);

/// -div(u grad psi), pseudo-spectral with 2/3 dealiasing; zero mean.
RealField rhs(const RealField& u);
/// Spectral form; also reports max |grad psi|.
SpectralField rhs_spectral(const SpectralField& u, double& max_speed);

/// Total mass h^2 sum u.
double mass(const RealField& u);

struct State {
  SpectralField u;
  double t = 0.0;
  double alpha = 1.0;

  RealField physical() const;
};

State step(const State& state, double dt, double cfl_limit = 0.5);

/// Full run; smallness is measured in config.smallness_norm (B^{-1+2/p}_{p,1}
/// in the critical setting). The minimum of u is tracked in the diagnostics
/// but positivity is not enforced.
RunResult run(const RunConfig& config);

}  // namespace fraclab::ks
