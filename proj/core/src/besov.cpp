#include "fraclab/besov.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fraclab/error.hpp"
#include "fraclab/fft.hpp"
#include "fraclab/multiplier.hpp"
#include "fraclab/parallel.hpp"

namespace fraclab {

void BesovParams::validate() const {
  if (!std::isfinite(s)) throw InvalidArgument("Besov regularity s must be finite");
  if (!(p >= 1.0)) throw InvalidArgument("Besov exponent p must satisfy p >= 1");
  if (!(r >= 1.0)) throw InvalidArgument("Besov exponent r must satisfy r >= 1");
}

BlockRange block_range(const Grid2D& grid) {
  const DyadicProfile profile;
  const double lo = grid.xi_min();
  const double hi = std::sqrt(2.0) * grid.xi_nyquist();
  int j_min = static_cast<int>(std::floor(std::log2(lo))) - 3;
  while (std::ldexp(profile.shell_outer(), j_min) <= lo) ++j_min;
  int j_max = static_cast<int>(std::ceil(std::log2(hi))) + 3;
  while (std::ldexp(profile.shell_inner(), j_max) >= hi) --j_max;
  return {j_min, j_max};
}

SpectralField project(const SpectralField& field, int j, ProjectionKind kind,
                      const DyadicProfile& profile) {
  if (kind == ProjectionKind::block) {
    return scale_radial(field, [&](double r) { return r > 0.0 ? profile.block(j, r) : 0.0; });
  }
  return scale_radial(field, [&](double r) { return profile.low_pass(j, r); });
}

double lebesgue_norm(const RealField& field, double p) {
  if (!(p >= 1.0)) throw InvalidArgument("Lebesgue exponent p must satisfy p >= 1");
  field.require_finite();
  const auto values = field.values();
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
  const double h = field.grid().spacing();
  double sum = 0.0;
  if (p == 2.0) {
    for (double v : values) sum += v * v;
    return std::sqrt(h * h * sum);
  }
  for (double v : values) sum += std::pow(std::abs(v), p);
  return std::pow(h * h * sum, 1.0 / p);
}

namespace {

// Blocks j with phi(2^-j r) possibly nonzero satisfy 3r/8 < 2^j < 4r/3.
template <class Visit>
void for_each_touching_block(const DyadicProfile& profile, double r, Visit&& visit) {
  int j = static_cast<int>(std::floor(std::log2(r / profile.shell_outer())));
  for (; std::ldexp(profile.shell_inner(), j) < r; ++j) {
    const double w = profile.block(j, r);
    if (w > 0.0) visit(j, w);
  }
}

}  // namespace

std::vector<double> block_lebesgue_norms(const SpectralField& field, double p,
                                         const DyadicProfile& profile, BlockRange range) {
  std::vector<double> norms(static_cast<std::size_t>(range.count()), 0.0);
  if (range.empty()) return norms;
  const Grid2D& grid = field.grid();
  const int n = grid.n();
  if (p == 2.0) {
    for (int i1 = 0; i1 < n; ++i1) {
      for (int i2 = 0; i2 < n; ++i2) {
        if (i1 == 0 && i2 == 0) continue;
        const double mag2 = std::norm(field(i1, i2));
        if (mag2 == 0.0) continue;
        for_each_touching_block(profile, grid.xi_norm(i1, i2), [&](int j, double w) {
          if (j >= range.j_min && j <= range.j_max) norms[j - range.j_min] += w * w * mag2;
        });
      }
    }
    const double length = grid.length();
    for (auto& v : norms) v = length * std::sqrt(v);
    return norms;
  }
  parallel_for(norms.size(), [&](std::size_t idx) {
    const int j = range.j_min + static_cast<int>(idx);
    norms[idx] = lebesgue_norm(inverse_transform(project(field, j, ProjectionKind::block, profile)), p);
  });
  return norms;
}

double combine_blocks(std::span<const double> block_norms, int j_first, double s, double r) {
  if (std::isinf(r)) {
    double m = 0.0;
    for (std::size_t i = 0; i < block_norms.size(); ++i) {
      m = std::max(m, std::exp2(s * (j_first + static_cast<int>(i))) * block_norms[i]);
    }
    return m;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < block_norms.size(); ++i) {
    sum += std::pow(std::exp2(s * (j_first + static_cast<int>(i))) * block_norms[i], r);
  }
  return std::pow(sum, 1.0 / r);
}

BesovNorm besov_norm(const SpectralField& field, const BesovParams& params,
                     const DyadicProfile& profile) {
  params.validate();
  const BlockRange range = block_range(field.grid());
  if (range.empty()) throw InvalidArgument("besov_norm: empty block range (grid too coarse)");
  const double mean = std::abs(field(0, 0));
  if (mean > 0.0 && mean * field.grid().length() > 1e-12 * std::sqrt(spectral_l2_squared(field))) {
    warn("besov_norm: nonzero mean projected out");
  }
  const auto blocks = block_lebesgue_norms(field, params.p, profile, range);
  return {combine_blocks(blocks, range.j_min, params.s, params.r), range};
}

BesovNorm besov_norm(const RealField& field, const BesovParams& params,
                     const DyadicProfile& profile) {
  return besov_norm(forward_transform(field), params, profile);
}

namespace {

void validate_series(std::span<const TimedField> series, double rho) {
  if (!(rho >= 1.0)) throw InvalidArgument("time exponent rho must satisfy rho >= 1");
  if (series.empty()) throw InvalidArgument("time series is empty");
  if (!std::isinf(rho) && series.size() < 2) {
    throw InvalidArgument("finite rho requires at least 2 time samples");
  }
  for (std::size_t i = 1; i < series.size(); ++i) {
    if (!(series[i].t > series[i - 1].t)) {
      std::ostringstream msg;
      msg << "timestamps must be strictly increasing (sample " << i << ")";
      throw InvalidArgument(msg.str());
    }
    require_same_grid(series[0].field.grid(), series[i].field.grid(), "time series");
  }
}

// (trapezoid integral of v^rho)^(1/rho), or max for rho = inf.
double time_norm(std::span<const TimedField> series, std::span<const double> v, double rho) {
  if (std::isinf(rho)) return *std::max_element(v.begin(), v.end());
  double integral = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double dt = series[i].t - series[i - 1].t;
    integral += 0.5 * dt * (std::pow(v[i - 1], rho) + std::pow(v[i], rho));
  }
  return std::pow(integral, 1.0 / rho);
}

}  // namespace

double chemin_lerner_norm(std::span<const TimedField> series, double rho, const BesovParams& params,
                          const DyadicProfile& profile) {
  params.validate();
  validate_series(series, rho);
  const BlockRange range = block_range(series[0].field.grid());
  if (range.empty()) throw InvalidArgument("chemin_lerner_norm: empty block range");
  std::vector<std::vector<double>> blocks(series.size());
  for (std::size_t i = 0; i < series.size(); ++i) {
    blocks[i] = block_lebesgue_norms(forward_transform(series[i].field), params.p, profile, range);
  }
  std::vector<double> per_block(static_cast<std::size_t>(range.count()));
  std::vector<double> history(series.size());
  for (std::size_t b = 0; b < per_block.size(); ++b) {
    for (std::size_t i = 0; i < series.size(); ++i) history[i] = blocks[i][b];
    per_block[b] = time_norm(series, history, rho);
  }
  return combine_blocks(per_block, range.j_min, params.s, params.r);
}

double time_lebesgue_besov_norm(std::span<const TimedField> series, double rho,
                                const BesovParams& params, const DyadicProfile& profile) {
  params.validate();
  validate_series(series, rho);
  std::vector<double> norms(series.size());
  for (std::size_t i = 0; i < series.size(); ++i) {
    norms[i] = besov_norm(series[i].field, params, profile).value;
  }
  return time_norm(series, norms, rho);
}

}  // namespace fraclab
