#pragma once

namespace fraclab {

/// Radial dyadic profile phi(r) = chi(r/2) - chi(r).
///
/// chi is a C-infinity cutoff equal to 1 on [0, 3/4] and 0 on [4/3, inf),
/// built from h(t) = g(t) / (g(t) + g(1 - t)), g(t) = exp(-1/t) for t > 0.
/// Consequently phi vanishes outside [3/4, 8/3] and sum_j phi(2^-j r) = 1 for
/// r > 0 by telescoping.
class DyadicProfile {
 public:
  DyadicProfile() = default;

  double cutoff_inner() const { return inner_; }
  double cutoff_outer() const { return outer_; }
  double shell_inner() const { return inner_; }
  double shell_outer() const { return 2.0 * outer_; }

  /// The smoothed step h on [0, 1]; 0 below, 1 above.
  double smooth_step(double t) const;
  /// chi(r).
  double cutoff(double r) const;
  /// 1 - chi(r), evaluated without cancellation near r = 3/4.
  double cutoff_complement(double r) const;
  /// phi(r). The two transitions of phi are disjoint ([3/4, 4/3] and
  /// [3/2, 8/3]), so each side is a single smooth-step evaluation.
  double operator()(double r) const {
    return r <= 1.5 ? cutoff_complement(r) : cutoff(0.5 * r);
  }

  /// Symbol of Delta_j at |xi| = r: phi(2^-j r).
  double block(int j, double r) const;
  /// Symbol of S_j at |xi| = r: sum_{k <= j-1} phi(2^-k r) = chi(2^-j r).
  double low_pass(int j, double r) const;

 private:
  double inner_ = 3.0 / 4.0;
  double outer_ = 4.0 / 3.0;
};

DyadicProfile build_dyadic_profile();

}  // namespace fraclab
