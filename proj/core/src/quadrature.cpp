#include "fraclab/quadrature.hpp"

#include <cmath>
#include <vector>

namespace fraclab {

namespace {

struct Segment {
  double a, b;
  double fa, fm, fb;
  double whole;
  double tol;
  int depth;
};

// One adaptive sweep with a fixed global tolerance. Also accumulates the
// refined integral of |f| in *magnitude_out.
QuadratureResult sweep(const std::function<double(double)>& f, double a, double b,
                       const QuadratureOptions& options, double magnitude_hint,
                       double* magnitude_out) {
  QuadratureResult result;
  constexpr int kPanels = 64;
  const double width = (b - a) / kPanels;

  // Samples at panel ends and midpoints.
  std::vector<double> samples(2 * kPanels + 1);
  for (int i = 0; i <= 2 * kPanels; ++i) samples[i] = f(a + 0.5 * width * i);
  result.evaluations = 2 * kPanels + 1;

  double magnitude = 0.0;
  for (int p = 0; p < kPanels; ++p) {
    magnitude += width / 6.0 *
                 (std::abs(samples[2 * p]) + 4.0 * std::abs(samples[2 * p + 1]) +
                  std::abs(samples[2 * p + 2]));
  }
  magnitude = std::max(magnitude, magnitude_hint);
  const double total_tol = std::max(options.rel_tol * magnitude, options.abs_floor);
  double refined_magnitude = 0.0;

  std::vector<Segment> stack;
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
  for (int p = kPanels - 1; p >= 0; --p) {
    const double pa = a + width * p;
    const double pb = (p == kPanels - 1) ? b : pa + width;
    const double fa = samples[2 * p], fm = samples[2 * p + 1], fb = samples[2 * p + 2];
    stack.push_back({pa, pb, fa, fm, fb, (pb - pa) / 6.0 * (fa + 4.0 * fm + fb),
                     total_tol / kPanels, 0});
  }

  while (!stack.empty()) {
    Segment s = stack.back();
    stack.pop_back();
    const double m = 0.5 * (s.a + s.b);
    const double lm = 0.5 * (s.a + m);
    const double rm = 0.5 * (m + s.b);
    const double flm = f(lm);
    const double frm = f(rm);
    result.evaluations += 2;
    const double left = (m - s.a) / 6.0 * (s.fa + 4.0 * flm + s.fm);
    const double right = (s.b - m) / 6.0 * (s.fm + 4.0 * frm + s.fb);
    const double delta = left + right - s.whole;
    const bool budget_left = result.evaluations < options.max_evaluations;
    if (std::abs(delta) <= 15.0 * s.tol || s.depth >= options.max_depth || !budget_left) {
      if (std::abs(delta) > 15.0 * s.tol) converged = false;
      value += left + right + delta / 15.0;
      refined_magnitude += std::abs(left) + std::abs(right);
      error += std::abs(delta) / 15.0;
      continue;
    }
    // Right half pushed first so the left half is refined first; the
    // accumulation order is then a fixed left-to-right sweep.
    stack.push_back({m, s.b, s.fm, frm, s.fb, right, 0.5 * s.tol, s.depth + 1});
    stack.push_back({s.a, m, s.fa, flm, s.fm, left, 0.5 * s.tol, s.depth + 1});
  }
  result.value = value;
  result.error_estimate = error;
  result.converged = converged;
  *magnitude_out = refined_magnitude;
  return result;
}

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureOptions& options) {
  if (!(b > a)) {
    QuadratureResult empty;
    empty.converged = true;
    return empty;
  }
  // The coarse magnitude can miss a narrow peak, leaving a tolerance below
  // rounding; a second sweep uses the refined magnitude instead.
  double refined = 0.0;
  QuadratureResult result = sweep(f, a, b, options, 0.0, &refined);
  if (!result.converged) {
    const int spent = result.evaluations;
    result = sweep(f, a, b, options, refined, &refined);
    result.evaluations += spent;
  }
  return result;
}

}  // namespace fraclab
