#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fraclab {

/// Which decay statement a measured series is compared against.
enum class ClaimKind {
  linear,        // d_t u + Lambda^alpha u = 0, B^ell_{p,1} decay from B^-s_{p,inf} data
  sqg,           // dissipative SQG, B^ell_{r,1} decay
  keller_segel,  // critical fractional Keller-Segel, B^ell_{r,1} decay
  sqg_lebesgue,  // dissipative SQG, L^r decay obtained through embedding
};

std::string_view to_string(ClaimKind kind);
/// Throws InvalidArgument for an unknown name.
ClaimKind parse_claim_kind(std::string_view name);

/// Parameters of a decay statement. For sqg_lebesgue, r is the Lebesgue
/// exponent of the measured L^r norm and ell is unused.
struct DecayClaim {
  ClaimKind kind = ClaimKind::linear;
  double s = 1.0;
  double ell = 0.0;
  double alpha = 1.0;
  double p = 2.0;
  double r = 2.0;

  /// Throws InvalidArgument naming the violated constraint.
  void validate() const;
  friend bool operator==(const DecayClaim&, const DecayClaim&) = default;
};

/// Exponent beta (negative) of the bound C (1 + t)^beta.
///   linear:       -(ell + s)/alpha
///   sqg:          -(ell + s)/alpha - (2/alpha)(1/r - 1/p)
///   keller_segel: -(ell + s) - 2(1/r - 1/p)
///   sqg_lebesgue: -s/alpha - (2/alpha)(1 - 1/r - 1/p)
double theoretical_exponent(const DecayClaim& claim);

/// A norm measured at increasing positive times.
struct NormSeries {
  std::string name;
  std::string descriptor;
  std::vector<double> times;
  std::vector<double> values;

  /// Throws InvalidArgument if lengths differ or times are not strictly increasing.
  void validate() const;
};

struct FitWindow {
  double lo;
  double hi;
};

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;  // log of the fitted amplitude
  double residual = 0.0;   // RMS deviation in log space
  double window_lo = 0.0;  // first and last sample time used
  double window_hi = 0.0;
  std::size_t samples = 0;
};

/// Least-squares fit of log(value) against log(1 + t) over samples with
/// t in [lo, hi]. Requires at least 10 samples there, all positive.
FitResult fit_decay_slope(const NormSeries& series, FitWindow window);

struct ReportEntry {
  DecayClaim claim;
  double theoretical;
  double fitted;
  double relative_error;
  bool passed;
};

struct DecayReport {
  std::vector<ReportEntry> entries;
  double tolerance = 0.0;
  bool passed = true;  // vacuously true when empty
};

/// Pairs fits with claims; relative error |slope - beta| / |beta| (absolute
/// when beta = 0) is compared against tolerance.
DecayReport build_report(std::span<const FitResult> fits, std::span<const DecayClaim> claims,
                         double tolerance);

}  // namespace fraclab
