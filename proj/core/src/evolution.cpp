#include "fraclab/evolution.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "fraclab/fft.hpp"
#include "fraclab/semigroup.hpp"

namespace fraclab {

namespace {

std::string cfl_message(double max_speed, double dt, double courant) {
  std::ostringstream msg;
  msg << "CFL violation: max|u| = " << max_speed << ", dt = " << dt
      << ", Courant number " << courant;
  return msg.str();
}

bool all_finite(const SpectralField& v) {
  for (const auto& c : v.coefficients()) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

void apply(std::span<const double> factor, SpectralField& v) {
  auto c = v.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= factor[i];
}

std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

CflViolation::CflViolation(double max_speed, double dt, double courant)
    : NumericalAbort(cfl_message(max_speed, dt, courant)), max_speed_(max_speed), dt_(dt) {}

NonFiniteState::NonFiniteState(SpectralField last_good, double t)
    : NumericalAbort("non-finite state detected after t = " + std::to_string(t)),
      last_good_(std::move(last_good)),
      t_(t) {}

double courant_number(const Grid2D& grid, double max_speed, double dt) {
  return dt * max_speed * grid.n() / grid.length();
}

SpectralField if_rk2_step(const SpectralField& v, double dt, std::span<const double> propagator,
                          const NonlinearTerm& nonlinear, double cfl_limit) {
  double speed = 0.0;
  const SpectralField k1 = nonlinear(v, speed);
  const double courant = courant_number(v.grid(), speed, dt);
  if (courant > cfl_limit) throw CflViolation(speed, dt, courant);

  SpectralField stage = v;
  auto s = stage.coefficients();
  const auto k1c = k1.coefficients();
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += dt * k1c[i];
  apply(propagator, stage);

  double stage_speed = 0.0;
  const SpectralField k2 = nonlinear(stage, stage_speed);

  SpectralField next = v;
  auto out = next.coefficients();
  const auto k2c = k2.coefficients();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += 0.5 * dt * k1c[i];
  apply(propagator, next);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += 0.5 * dt * k2c[i];
  return next;
}

void RunConfig::validate() const {
  if (!(alpha > 0.0 && alpha <= 2.0)) throw InvalidArgument("alpha must lie in (0, 2]");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("dt must be > 0");
  if (!(final_time > 0.0) || !std::isfinite(final_time)) throw InvalidArgument("T must be > 0");
  if (!(cfl_limit > 0.0)) throw InvalidArgument("CFL limit must be > 0");
  initial.validate();
  smallness_norm.validate();
  for (const auto& norm : norms) norm.validate();
  for (double p : lebesgue_norms) {
    if (!(p >= 1.0)) throw InvalidArgument("Lebesgue exponent must satisfy p >= 1");
  }
  for (std::size_t i = 0; i < sample_times.size(); ++i) {
    const double t = sample_times[i];
    if (!(t > 0.0 && t <= final_time)) {
      throw InvalidArgument("sample times must lie in (0, T]");
    }
    if (i > 0 && !(t > sample_times[i - 1])) {
      throw InvalidArgument("sample times must be strictly increasing");
    }
  }
}

std::string describe(const RunConfig& c) {
  std::ostringstream out;
  out << "n=" << c.grid.n() << ";L=" << shortest(c.grid.length()) << ";alpha=" << shortest(c.alpha)
      << ";dt=" << shortest(c.dt) << ";T=" << shortest(c.final_time)
      << ";amp=" << shortest(c.initial.amplitude)
      << ";jlo=" << (c.initial.j_lo ? std::to_string(*c.initial.j_lo) : "auto")
      << ";jhi=" << (c.initial.j_hi ? std::to_string(*c.initial.j_hi) : "auto")
      << ";env=" << shortest(c.initial.envelope_exponent) << ";cut=" << shortest(c.initial.cutoff)
      << ";seed=" << c.initial.seed << ";small=" << besov_label(c.smallness_norm)
      << ";budget=" << shortest(c.smallness_budget) << ";cfl=" << shortest(c.cfl_limit)
      << ";samples=";
  for (double t : c.sample_times) out << shortest(t) << ',';
  out << ";norms=";
  for (const auto& p : c.norms) out << besov_label(p) << ',';
  for (double p : c.lebesgue_norms) out << lebesgue_label(p) << ',';
  return out.str();
}

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char ch : text) {
    hash ^= ch;
    hash *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << hash;
  return out.str();
}

std::string besov_label(const BesovParams& params) {
  auto idx = [](double v) { return std::isinf(v) ? std::string("inf") : shortest(v); };
  return "B^" + shortest(params.s) + "_{" + idx(params.p) + "," + idx(params.r) + "}";
}

std::string lebesgue_label(double p) {
  return "L^" + (std::isinf(p) ? std::string("inf") : shortest(p));
}

RunResult run_evolution(const RunConfig& config, const NonlinearTerm& nonlinear,
                        const std::string& model_name) {
  config.validate();
  const DyadicProfile profile;
  const Grid2D& grid = config.grid;

  RunResult result(grid);
  result.seed = config.initial.seed;
  result.config_hash = fnv1a_hex(model_name + ";" + describe(config));

  SpectralField v = make_initial_spectrum(grid, config.initial, config.smallness_norm, profile);
  result.initial_smallness = besov_norm(v, config.smallness_norm, profile).value;
  // Scaling to exactly the budget may overshoot it by rounding.
  if (result.initial_smallness > config.smallness_budget * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "initial " << besov_label(config.smallness_norm) << " norm "
        << result.initial_smallness << " exceeds smallness budget " << config.smallness_budget;
    throw InvalidArgument(msg.str());
  }
  result.initial_state = v;
  const double mean0 = v(0, 0).real();
  result.diagnostics.initial_mean = mean0;

  for (const auto& norm : config.norms) {
    result.initial_norms.push_back(besov_norm(v, norm, profile).value);
    NormSeries series;
    series.name = besov_label(norm);
    series.descriptor = model_name + " " + besov_label(norm);
    result.series.push_back(std::move(series));
  }
  {
    const RealField physical = inverse_transform(v);
    const auto values = physical.values();
    result.diagnostics.min_value = *std::min_element(values.begin(), values.end());
    for (double p : config.lebesgue_norms) {
      result.initial_norms.push_back(lebesgue_norm(physical, p));
      NormSeries series;
      series.name = lebesgue_label(p);
      series.descriptor = model_name + " " + lebesgue_label(p);
      result.series.push_back(std::move(series));
    }
  }

  const std::vector<double> full_step = linear_propagator(grid, config.alpha, config.dt);
  double t = 0.0;
  double l2 = std::sqrt(spectral_l2_squared(v));
  auto step_to = [&](double target) {
    while (t < target) {
      double h = config.dt;
      bool last = false;
      if (t + h >= target * (1.0 - 1e-12)) {
        h = target - t;
        last = true;
      }
      double speed = 0.0;
      std::vector<double> partial;
      std::span<const double> factor = full_step;
      if (h != config.dt) {
        partial = linear_propagator(grid, config.alpha, h);
        factor = partial;
      }
      auto counting = [&](const SpectralField& x, double& s) {
        SpectralField out = nonlinear(x, s);
        speed = std::max(speed, s);
        return out;
      };
      SpectralField next = if_rk2_step(v, h, factor, counting, config.cfl_limit);
      if (!all_finite(next)) throw NonFiniteState(v, t);
      result.diagnostics.max_courant =
          std::max(result.diagnostics.max_courant, courant_number(grid, speed, h));
      const double l2_next = std::sqrt(spectral_l2_squared(next));
      if (l2 > 0.0) {
        result.diagnostics.max_l2_ratio = std::max(result.diagnostics.max_l2_ratio, l2_next / l2);
      }
      l2 = l2_next;
      v = std::move(next);
      t = last ? target : t + h;
      ++result.diagnostics.steps;
    }
  };

  for (double target : config.sample_times) {
    step_to(target);
    for (std::size_t k = 0; k < config.norms.size(); ++k) {
      result.series[k].times.push_back(t);
      result.series[k].values.push_back(besov_norm(v, config.norms[k], profile).value);
    }
    const RealField physical = inverse_transform(v);
    for (std::size_t k = 0; k < config.lebesgue_norms.size(); ++k) {
      NormSeries& series = result.series[config.norms.size() + k];
      series.times.push_back(t);
      series.values.push_back(lebesgue_norm(physical, config.lebesgue_norms[k]));
    }
    const auto values = physical.values();
    result.diagnostics.min_value =
        std::min(result.diagnostics.min_value, *std::min_element(values.begin(), values.end()));
    const double mean = v(0, 0).real();
    result.means.push_back(mean);
    result.diagnostics.max_mean_drift =
        std::max(result.diagnostics.max_mean_drift, std::abs(mean - mean0));
  }
  step_to(config.final_time);
  result.final_state = v;
  result.final_time = t;
  return result;
}

}  // namespace fraclab
