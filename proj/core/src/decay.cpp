#include "fraclab/decay.hpp"

#include <cmath>
#include <sstream>

#include "fraclab/error.hpp"

namespace fraclab {

std::string_view to_string(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::linear:
      return "linear";
    case ClaimKind::sqg:
      return "sqg";
    case ClaimKind::keller_segel:
      return "keller_segel";
    case ClaimKind::sqg_lebesgue:
      return "sqg_lebesgue";
  }
  return "unknown";
}

ClaimKind parse_claim_kind(std::string_view name) {
  for (auto kind : {ClaimKind::linear, ClaimKind::sqg, ClaimKind::keller_segel,
                    ClaimKind::sqg_lebesgue}) {
    if (name == to_string(kind)) return kind;
  }
  throw InvalidArgument("unknown claim kind '" + std::string(name) +
                        "' (expected linear, sqg, keller_segel or sqg_lebesgue)");
}

namespace {

[[noreturn]] void violated(ClaimKind kind, const std::string& constraint, double value) {
  std::ostringstream msg;
  msg << to_string(kind) << " claim requires " << constraint << " (got " << value << ")";
  throw InvalidArgument(msg.str());
}

void require_finite(const DecayClaim& c) {
  for (double v : {c.s, c.ell, c.alpha, c.p, c.r}) {
    if (!std::isfinite(v)) throw InvalidArgument("claim parameters must be finite");
  }
}

void require_p(const DecayClaim& c) {
  if (!(c.p >= 2.0)) violated(c.kind, "2 <= p < inf", c.p);
}

void require_r_between(const DecayClaim& c) {
  if (!(c.r >= 2.0 && c.r <= c.p)) violated(c.kind, "2 <= r <= p", c.r);
}

void require_ell(const DecayClaim& c, double upper, const char* upper_text) {
  const double lower = -c.s - 2.0 * (1.0 / c.r - 1.0 / c.p);
  if (!(c.ell >= lower)) violated(c.kind, "ell >= -s - 2(1/r - 1/p)", c.ell);
  if (!(c.ell <= upper)) violated(c.kind, std::string("ell <= ") + upper_text, c.ell);
}

}  // namespace

void DecayClaim::validate() const {
  require_finite(*this);
  switch (kind) {
    case ClaimKind::linear:
      if (!(s >= 0.0)) violated(kind, "s >= 0", s);
      if (!(ell > -s)) violated(kind, "ell > -s", ell);
      if (!(alpha > 0.0 && alpha <= 2.0)) violated(kind, "0 < alpha <= 2", alpha);
      require_p(*this);
      return;
    case ClaimKind::sqg:
      if (!(alpha > 0.0 && alpha <= 1.0)) violated(kind, "0 < alpha <= 1", alpha);
      require_p(*this);
      require_r_between(*this);
      if (!(s > -2.0 / p && s < 1.0 + 2.0 / p)) violated(kind, "-2/p < s < 1 + 2/p", s);
      require_ell(*this, 1.0 + 2.0 / p - alpha, "1 + 2/p - alpha");
      return;
    case ClaimKind::keller_segel:
      if (alpha != 1.0) violated(kind, "alpha = 1", alpha);
      require_p(*this);
      require_r_between(*this);
      if (!(s > 1.0 - 2.0 / p && s < 1.0 + 2.0 / p)) violated(kind, "1 - 2/p < s < 1 + 2/p", s);
      require_ell(*this, -1.0 + 2.0 / p, "-1 + 2/p");
      return;
    case ClaimKind::sqg_lebesgue:
      if (!(alpha > 0.0 && alpha <= 1.0)) violated(kind, "0 < alpha <= 1", alpha);
      require_p(*this);
      if (!(r >= 2.0)) violated(kind, "2 <= r < inf", r);
      if (!(s > -2.0 / p && s < 1.0 + 2.0 / p)) violated(kind, "-2/p < s < 1 + 2/p", s);
      return;
  }
}

double theoretical_exponent(const DecayClaim& claim) {
  claim.validate();
  const double a = claim.alpha;
  switch (claim.kind) {
    case ClaimKind::linear:
      return -(claim.ell + claim.s) / a;
    case ClaimKind::sqg:
      return -(claim.ell + claim.s) / a - (2.0 / a) * (1.0 / claim.r - 1.0 / claim.p);
    case ClaimKind::keller_segel:
      return -(claim.ell + claim.s) - 2.0 * (1.0 / claim.r - 1.0 / claim.p);
    case ClaimKind::sqg_lebesgue:
      return -claim.s / a - (2.0 / a) * (1.0 - 1.0 / claim.r - 1.0 / claim.p);
  }
  return 0.0;
}

void NormSeries::validate() const {
  if (times.size() != values.size()) {
    throw InvalidArgument("norm series '" + name + "': times and values differ in length");
  }
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) {
      throw InvalidArgument("norm series '" + name + "': times not strictly increasing");
    }
  }
}

FitResult fit_decay_slope(const NormSeries& series, FitWindow window) {
  series.validate();
  std::vector<double> xs;
  std::vector<double> ys;
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i < series.times.size(); ++i) {
    const double t = series.times[i];
    if (t < window.lo || t > window.hi) continue;
    const double v = series.values[i];
    if (!(v > 0.0)) {
      std::ostringstream msg;
      msg << "fit_decay_slope: nonpositive value " << v << " at t = " << t << " in window";
      throw InvalidArgument(msg.str());
    }
    if (xs.empty()) lo = t;
    hi = t;
    xs.push_back(std::log1p(t));
    ys.push_back(std::log(v));
  }
  if (xs.size() < 10) {
    throw InvalidArgument("fit_decay_slope: need at least 10 samples in window, have " +
                          std::to_string(xs.size()));
  }
  const double count = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  FitResult fit;
  fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double d = ys[i] - (fit.intercept + fit.slope * xs[i]);
    rss += d * d;
  }
  fit.residual = std::sqrt(rss / count);
  fit.window_lo = lo;
  fit.window_hi = hi;
  fit.samples = xs.size();
  return fit;
}

DecayReport build_report(std::span<const FitResult> fits, std::span<const DecayClaim> claims,
                         double tolerance) {
  if (fits.size() != claims.size()) {
    throw InvalidArgument("build_report: " + std::to_string(fits.size()) + " fits but " +
                          std::to_string(claims.size()) + " claims");
  }
  DecayReport report;
  report.tolerance = tolerance;
  for (std::size_t i = 0; i < fits.size(); ++i) {
    ReportEntry entry;
    entry.claim = claims[i];
    entry.theoretical = theoretical_exponent(claims[i]);
    entry.fitted = fits[i].slope;
    const double diff = std::abs(entry.fitted - entry.theoretical);
    entry.relative_error =
        entry.theoretical != 0.0 ? diff / std::abs(entry.theoretical) : diff;
    entry.passed = entry.relative_error <= tolerance;
    report.passed = report.passed && entry.passed;
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace fraclab
