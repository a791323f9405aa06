#include "fraclab/sqg.hpp"

#include <algorithm>
#include <cmath>

#include "fraclab/fft.hpp"
#include "fraclab/multiplier.hpp"
#include "fraclab/semigroup.hpp"

namespace fraclab::sqg {

std::pair<SpectralField, SpectralField> velocity_spectral(const SpectralField& theta) {
  SpectralField u1 = apply_fourier_multiplier(theta, MultiplierSpec::riesz(2));
  u1 *= -1.0;
  SpectralField u2 = apply_fourier_multiplier(theta, MultiplierSpec::riesz(1));
  return {std::move(u1), std::move(u2)};
}

Velocity velocity(const RealField& theta) {
  auto [u1, u2] = velocity_spectral(forward_transform(theta));
  return {inverse_transform(u1), inverse_transform(u2)};
}

SpectralField rhs_spectral(const SpectralField& theta, double& max_speed) {
  auto [u1_hat, u2_hat] = velocity_spectral(theta);
  const RealField u1 = inverse_transform(u1_hat);
  const RealField u2 = inverse_transform(u2_hat);
  const RealField d1 = inverse_transform(apply_fourier_multiplier(theta, MultiplierSpec::partial(1)));
  const RealField d2 = inverse_transform(apply_fourier_multiplier(theta, MultiplierSpec::partial(2)));

  RealField advection(theta.grid());
  auto out = advection.values();
  const auto a1 = u1.values(), a2 = u2.values(), g1 = d1.values(), g2 = d2.values();
  double speed2 = 0.0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = -(a1[i] * g1[i] + a2[i] * g2[i]);
    speed2 = std::max(speed2, a1[i] * a1[i] + a2[i] * a2[i]);
  }
  max_speed = std::sqrt(speed2);
  return dealias(forward_transform(advection));
}

RealField rhs(const RealField& theta) {
  double speed = 0.0;
  return inverse_transform(rhs_spectral(forward_transform(theta), speed));
}

RealField State::physical() const { return inverse_transform(theta); }

State step(const State& state, double dt, double cfl_limit) {
  const auto propagator = linear_propagator(state.theta.grid(), state.alpha, dt);
  NonlinearTerm term = [](const SpectralField& v, double& speed) { return rhs_spectral(v, speed); };
  return {if_rk2_step(state.theta, dt, propagator, term, cfl_limit), state.t + dt, state.alpha};
}

RunResult run(const RunConfig& config) {
  NonlinearTerm term = [](const SpectralField& v, double& speed) { return rhs_spectral(v, speed); };
  return run_evolution(config, term, "sqg");
}

}  // namespace fraclab::sqg
