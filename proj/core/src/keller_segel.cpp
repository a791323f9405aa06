#include "fraclab/keller_segel.hpp"

#include <algorithm>
#include <cmath>

#include "fraclab/fft.hpp"
#include "fraclab/multiplier.hpp"
#include "fraclab/semigroup.hpp"

namespace fraclab::ks {

SpectralField potential_spectral(const SpectralField& u) {
  SpectralField centered = u;
  centered(0, 0) = 0.0;
  return apply_fourier_multiplier(centered, MultiplierSpec::inverse_laplacian());
}

RealField potential(const RealField& u) {
  return inverse_transform(potential_spectral(forward_transform(u)));
}

SpectralField rhs_spectral(const SpectralField& u, double& max_speed) {
  const SpectralField psi = potential_spectral(u);
  const RealField g1 = inverse_transform(apply_fourier_multiplier(psi, MultiplierSpec::partial(1)));
  const RealField g2 = inverse_transform(apply_fourier_multiplier(psi, MultiplierSpec::partial(2)));
  const RealField density = inverse_transform(u);

  const Grid2D& grid = u.grid();
  RealField flux1(grid), flux2(grid);
  auto f1 = flux1.values(), f2 = flux2.values();
  const auto a = density.values(), b1 = g1.values(), b2 = g2.values();
  double speed2 = 0.0;
  for (std::size_t i = 0; i < f1.size(); ++i) {
    f1[i] = a[i] * b1[i];
    f2[i] = a[i] * b2[i];
    speed2 = std::max(speed2, b1[i] * b1[i] + b2[i] * b2[i]);
  }
  max_speed = std::sqrt(speed2);
  SpectralField div = apply_fourier_multiplier(dealias(forward_transform(flux1)), MultiplierSpec::partial(1));
  div += apply_fourier_multiplier(dealias(forward_transform(flux2)), MultiplierSpec::partial(2));
  div *= -1.0;
  return div;
}

RealField rhs(const RealField& u) {
  double speed = 0.0;
  return inverse_transform(rhs_spectral(forward_transform(u), speed));
}

double mass(const RealField& u) { return u.integral(); }

RealField State::physical() const { return inverse_transform(u); }

State step(const State& state, double dt, double cfl_limit) {
  const auto propagator = linear_propagator(state.u.grid(), state.alpha, dt);
  NonlinearTerm term = [](const SpectralField& v, double& speed) { return rhs_spectral(v, speed); };
  return {if_rk2_step(state.u, dt, propagator, term, cfl_limit), state.t + dt, state.alpha};
}

RunResult run(const RunConfig& config) {
  NonlinearTerm term = [](const SpectralField& v, double& speed) { return rhs_spectral(v, speed); };
  return run_evolution(config, term, "keller_segel");
}

}  // namespace fraclab::ks
