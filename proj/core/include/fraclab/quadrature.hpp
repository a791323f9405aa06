#pragma once

#include <functional>

namespace fraclab {

struct QuadratureOptions {
  double rel_tol = 1e-9;
  /// Absolute floor on the requested accuracy so that underflowed integrands
  /// terminate instead of recursing forever.
  double abs_floor = 1e-300;
  int max_evaluations = 4'000'000;
  int max_depth = 60;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Adaptive Simpson integration of f over [a, b] with Richardson correction.
///
/// The target accuracy is max(rel_tol * |I|, abs_floor), where |I| is a
/// 64-panel composite Simpson estimate of the integral of |f|. The interval is
/// split into those 64 panels first and each panel receives a share of the
/// tolerance proportional to its width.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureOptions& options = {});

}  // namespace fraclab
