#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fraclab/besov.hpp"
#include "fraclab/decay.hpp"
#include "fraclab/error.hpp"
#include "fraclab/grid.hpp"
#include "fraclab/initial_data.hpp"

namespace fraclab {

/// Spectral nonlinear term N(v) of d_t v + Lambda^alpha v = N(v). Must also
/// report the maximum transport speed of v for the CFL monitor.
using NonlinearTerm = std::function<SpectralField(const SpectralField& v, double& max_speed)>;

/// dt * max|u| * n / L exceeded the configured limit.
class CflViolation : public NumericalAbort {
 public:
  CflViolation(double max_speed, double dt, double courant);
  double max_speed() const { return max_speed_; }
  double dt() const { return dt_; }

 private:
  double max_speed_;
  double dt_;
};

/// The state became non-finite; carries the last finite state.
class NonFiniteState : public NumericalAbort {
 public:
  NonFiniteState(SpectralField last_good, double t);
  const SpectralField& last_good() const { return last_good_; }
  double time() const { return t_; }

 private:
  SpectralField last_good_;
  double t_;
};

/// Courant number dt * max_speed * n / L.
double courant_number(const Grid2D& grid, double max_speed, double dt);

/// One integrating-factor RK2 (Heun) step with the linear part applied exactly:
///   a      = E (v + dt N(v))
///   v_next = E (v + dt/2 N(v)) + dt/2 N(a),   E = exp(-dt |xi|^alpha).
/// Throws CflViolation if the Courant number of v exceeds cfl_limit.
SpectralField if_rk2_step(const SpectralField& v, double dt, std::span<const double> propagator,
                          const NonlinearTerm& nonlinear, double cfl_limit = 0.5);

/// Configuration shared by the SQG and Keller-Segel drivers.
struct RunConfig {
  Grid2D grid{256, 402.12385965949352};  // L = 2 pi * 64
  double alpha = 1.0;
  double dt = 0.05;
  double final_time = 6.4;
  InitialSpectrum initial;
  /// Positive, strictly increasing, <= final_time. The initial state is
  /// always recorded separately.
  std::vector<double> sample_times;
  std::vector<BesovParams> norms;
  /// Lebesgue exponents recorded after the Besov norms.
  std::vector<double> lebesgue_norms;
  /// Norm used both to scale the initial data and to check smallness.
  BesovParams smallness_norm{0.0, 2.0, 1.0};
  double smallness_budget = 1e-2;
  double cfl_limit = 0.5;

  void validate() const;
};

/// Canonical one-line description of a RunConfig; stable across runs.
std::string describe(const RunConfig& config);
/// 64-bit FNV-1a of a string, as 16 hex digits.
std::string fnv1a_hex(std::string_view text);

struct RunDiagnostics {
  std::size_t steps = 0;
  double max_courant = 0.0;
  /// max over samples of |mean(t) - mean(0)|.
  double max_mean_drift = 0.0;
  /// max over steps of ||v_{k+1}||_{L^2} / ||v_k||_{L^2}.
  double max_l2_ratio = 0.0;
  /// min over samples of the field value.
  double min_value = 0.0;
  double initial_mean = 0.0;
};

struct RunResult {
  explicit RunResult(const Grid2D& grid) : initial_state(grid), final_state(grid) {}

  std::vector<NormSeries> series;     // Besov norms, then Lebesgue norms
  std::vector<double> initial_norms;  // configured norms at t = 0
  std::vector<double> means;          // field mean at each sample
  double initial_smallness = 0.0;
  SpectralField initial_state;
  SpectralField final_state;
  double final_time = 0.0;
  std::string config_hash;
  std::uint64_t seed = 0;
  RunDiagnostics diagnostics;
};

/// Builds the seeded initial data, enforces the smallness budget, integrates
/// to final_time landing exactly on every sample time, and records each norm.
RunResult run_evolution(const RunConfig& config, const NonlinearTerm& nonlinear,
                        const std::string& model_name);

/// Norm-series label such as "B^0_{2,1}".
std::string besov_label(const BesovParams& params);
/// Norm-series label such as "L^3" or "L^inf".
std::string lebesgue_label(double p);

}  // namespace fraclab
