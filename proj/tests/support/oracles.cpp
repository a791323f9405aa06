#include "oracles.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fraclab::reference {

namespace {
constexpr double kPi = std::numbers::pi;

int slot(int k, int n) { return k >= 0 ? k : k + n; }
}  // namespace

SpectralField direct_dft(const RealField& field) {
  const Grid2D& g = field.grid();
  const int n = g.n();
  SpectralField out(g);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::complex<double> sum = 0.0;
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          const double phase = -2.0 * kPi * (double(a) * x + double(b) * y) / n;
          sum += field(x, y) * std::complex<double>(std::cos(phase), std::sin(phase));
        }
      }
      out(a, b) = sum / double(n * n);
    }
  }
  return out;
}

std::vector<std::complex<double>> direct_idft(const SpectralField& field) {
  const int n = field.grid().n();
  std::vector<std::complex<double>> out(std::size_t(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      std::complex<double> sum = 0.0;
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          const double phase = 2.0 * kPi * (double(a) * x + double(b) * y) / n;
          sum += field(a, b) * std::complex<double>(std::cos(phase), std::sin(phase));
        }
      }
      out[std::size_t(x) * n + y] = sum;
    }
  }
  return out;
}

SpectralField brute_dealiased_product(const SpectralField& f, const SpectralField& g) {
  const int n = f.grid().n();
  SpectralField out(f.grid());
  // Zero modes of f contribute nothing; skipping them keeps the sum exact.
  std::vector<std::pair<int, int>> support;
  for (int m1 = -n / 2; m1 < n / 2; ++m1) {
    for (int m2 = -n / 2; m2 < n / 2; ++m2) {
      if (f(slot(m1, n), slot(m2, n)) != 0.0) support.emplace_back(m1, m2);
    }
  }
  for (int k1 = -n / 2; k1 < n / 2; ++k1) {
    for (int k2 = -n / 2; k2 < n / 2; ++k2) {
      if (3 * std::max(std::abs(k1), std::abs(k2)) > n) continue;
      std::complex<double> sum = 0.0;
      for (const auto& [m1, m2] : support) {
        const int d1 = k1 - m1, d2 = k2 - m2;
        if (d1 < -n / 2 || d1 >= n / 2 || d2 < -n / 2 || d2 >= n / 2) continue;
        sum += f(slot(m1, n), slot(m2, n)) * g(slot(d1, n), slot(d2, n));
      }
      out(slot(k1, n), slot(k2, n)) = sum;
    }
  }
  return out;
}

double reference_cutoff(double r) {
  // chi = 1 on [0, 3/4], 0 on [4/3, inf), smooth step exp(-1/t) in between.
  if (r <= 0.75) return 1.0;
  if (r >= 4.0 / 3.0) return 0.0;
  const double t = (4.0 / 3.0 - r) / (4.0 / 3.0 - 0.75);
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

double reference_phi(double r) { return reference_cutoff(r / 2.0) - reference_cutoff(r); }

double riemann_ball_block_norm(double radius, int j, double t, double alpha, int points) {
  const double scale = std::pow(2.0, j);
  const double lo = 0.75 * scale;
  const double hi = std::min(8.0 / 3.0 * scale, radius);
  if (hi <= lo) return 0.0;
  const double h = (hi - lo) / points;
  double sum = 0.0;
  for (int i = 0; i < points; ++i) {
    const double r = lo + (i + 0.5) * h;
    const double w = reference_phi(r / scale);
    sum += w * w * std::exp(-2.0 * t * std::pow(r, alpha)) * r;
  }
  // (2 pi)^-2 times the circle measure 2 pi.
  return std::sqrt(sum * h / (2.0 * kPi));
}

SpectralField lcg_spectrum(const Grid2D& grid, std::uint64_t seed, int kmax) {
  const int n = grid.n();
  std::uint64_t state = seed * 2862933555777941757ull + 3037000493ull;
  auto next = [&] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return double(state >> 11) / 9007199254740992.0 - 0.5;
  };
  SpectralField c(grid);
  for (int k1 = -kmax; k1 <= kmax; ++k1) {
    for (int k2 = -kmax; k2 <= kmax; ++k2) {
      // Fill one member of each +-k pair and mirror it.
      if (k1 < 0 || (k1 == 0 && k2 <= 0)) continue;
      const std::complex<double> v(next(), next());
      c(slot(k1, n), slot(k2, n)) = v;
      c(slot(-k1, n), slot(-k2, n)) = std::conj(v);
    }
  }
  return c;
}

double rational(const char* text) {
  const char* slash = std::strchr(text, '/');
  if (!slash) return std::strtod(text, nullptr);
  const double p = std::strtod(text, nullptr);
  const double q = std::strtod(slash + 1, nullptr);
  return p / q;
}

const std::vector<ExponentRow>& exponent_table() {
  static const std::vector<ExponentRow> rows = {
      {"linear", 1.5, -1.0, 0.5, 8.0, 2.0, "-1"},
      {"linear", 1.375, -0.875, 0.25, 2.0, 2.0, "-2"},
      {"linear", 0.25, 1.5, 0.25, 4.0, 2.0, "-7"},
      {"linear", 0.875, -0.5, 0.25, 16.0, 2.0, "-3/2"},
      {"linear", 2.25, -1.125, 0.25, 16.0, 2.0, "-9/2"},
      {"linear", 2.25, 2.625, 0.25, 4.0, 2.0, "-39/2"},
      {"linear", 0.875, -0.625, 0.25, 16.0, 2.0, "-1"},
      {"linear", 1.625, -0.375, 1.0, 4.0, 2.0, "-5/4"},
      {"linear", 2.125, -0.625, 1.0, 2.0, 2.0, "-3/2"},
      {"linear", 1.375, -0.5, 0.5, 2.0, 2.0, "-7/4"},
      {"linear", 2.375, -0.375, 0.25, 2.0, 2.0, "-8"},
      {"linear", 3.0, 0.5, 2.0, 16.0, 2.0, "-7/4"},
      {"linear", 1.375, 1.125, 2.0, 16.0, 2.0, "-5/4"},
      {"linear", 2.75, -0.125, 0.5, 4.0, 2.0, "-21/4"},
      {"linear", 2.0, 2.0, 1.0, 2.0, 2.0, "-4"},
      {"linear", 1.125, -0.5, 2.0, 8.0, 2.0, "-5/16"},
      {"linear", 0.625, 2.5, 2.0, 2.0, 2.0, "-25/16"},
      {"linear", 1.875, 1.5, 0.5, 8.0, 2.0, "-27/4"},
      {"linear", 3.0, 2.375, 0.25, 2.0, 2.0, "-43/2"},
      {"linear", 2.75, 0.75, 1.0, 8.0, 2.0, "-7/2"},
      {"sqg", 0.125, -0.125, 1.0, 16.0, 16.0, "0"},
      {"sqg", 1.125, -0.875, 0.5, 8.0, 8.0, "-1/2"},
      {"sqg", 1.625, 0.625, 1.0, 2.0, 2.0, "-9/4"},
      {"sqg", 0.625, -0.625, 0.5, 16.0, 16.0, "0"},
      {"sqg", 0.125, 0.375, 0.5, 16.0, 4.0, "-7/4"},
      {"sqg", -0.375, 1.75, 0.25, 2.0, 2.0, "-11/2"},
      {"sqg", 1.375, 0.5, 0.5, 4.0, 4.0, "-15/4"},
      {"sqg", 0.625, 1.5, 0.25, 2.0, 2.0, "-17/2"},
      {"sqg", 0.875, -0.125, 0.25, 8.0, 4.0, "-4"},
      {"sqg", 0.375, -0.125, 0.5, 16.0, 16.0, "-1/2"},
      {"sqg", 0.0, 1.25, 0.25, 2.0, 2.0, "-5"},
      {"sqg", 1.25, 1.0, 0.25, 4.0, 4.0, "-9"},
      {"sqg", -0.375, 0.5, 0.5, 4.0, 4.0, "-1/4"},
      {"sqg", 0.625, -0.5, 1.0, 16.0, 8.0, "-1/4"},
      {"sqg", 0.625, 0.875, 0.5, 2.0, 2.0, "-3"},
      {"sqg", 0.75, -0.75, 0.25, 16.0, 16.0, "0"},
      {"sqg", 0.5, -0.375, 0.25, 4.0, 2.0, "-5/2"},
      {"sqg", -0.5, 0.5, 0.5, 2.0, 2.0, "0"},
      {"sqg", 0.25, 0.375, 1.0, 4.0, 2.0, "-9/8"},
      {"sqg", 1.5, 0.0, 0.25, 2.0, 2.0, "-6"},
      {"keller_segel", 0.875, -0.625, 1.0, 4.0, 4.0, "-1/4"},
      {"keller_segel", 1.0, -1.0, 1.0, 16.0, 2.0, "-7/8"},
      {"keller_segel", 1.0, -0.875, 1.0, 16.0, 16.0, "-1/8"},
      {"keller_segel", 0.25, 0.0, 1.0, 2.0, 2.0, "-1/4"},
      {"keller_segel", 1.0, -0.875, 1.0, 8.0, 8.0, "-1/8"},
      {"keller_segel", 0.75, -0.75, 1.0, 4.0, 2.0, "-1/2"},
      {"keller_segel", 1.125, -0.875, 1.0, 8.0, 2.0, "-1"},
      {"keller_segel", 1.375, -1.25, 1.0, 2.0, 2.0, "-1/8"},
      {"keller_segel", 1.0, -1.0, 1.0, 8.0, 8.0, "0"},
      {"keller_segel", 1.125, -0.875, 1.0, 8.0, 2.0, "-1"},
      {"keller_segel", 0.875, -0.875, 1.0, 8.0, 8.0, "0"},
      {"keller_segel", 1.25, -0.5, 1.0, 4.0, 4.0, "-3/4"},
      {"keller_segel", 1.125, -0.75, 1.0, 4.0, 2.0, "-7/8"},
      {"keller_segel", 0.875, -0.875, 1.0, 8.0, 8.0, "0"},
      {"keller_segel", 1.0, -1.125, 1.0, 8.0, 4.0, "-1/8"},
      {"keller_segel", 1.125, -1.125, 1.0, 8.0, 4.0, "-1/4"},
      {"keller_segel", 0.875, -1.5, 1.0, 8.0, 2.0, "-1/8"},
      {"keller_segel", 0.75, -0.625, 1.0, 4.0, 4.0, "-1/8"},
      {"keller_segel", 1.125, -0.625, 1.0, 4.0, 4.0, "-1/2"},
      {"keller_segel", 1.875, -0.5, 1.0, 2.0, 2.0, "-11/8"},
      {"sqg_lebesgue", 0.625, 0.0, 1.0, 2.0, 2.0, "-5/8"},
      {"sqg_lebesgue", 0.375, 0.0, 0.5, 4.0, 2.0, "-7/4"},
      {"sqg_lebesgue", 0.625, 0.0, 0.25, 8.0, 8.0, "-17/2"},
      {"sqg_lebesgue", 0.125, 0.0, 0.5, 16.0, 8.0, "-7/2"},
      {"sqg_lebesgue", -0.375, 0.0, 0.25, 4.0, 2.0, "-1/2"},
      {"sqg_lebesgue", 1.125, 0.0, 1.0, 4.0, 4.0, "-17/8"},
      {"sqg_lebesgue", 0.5, 0.0, 1.0, 4.0, 8.0, "-7/4"},
      {"sqg_lebesgue", 0.875, 0.0, 0.25, 8.0, 8.0, "-19/2"},
      {"sqg_lebesgue", 1.125, 0.0, 0.25, 4.0, 2.0, "-13/2"},
      {"sqg_lebesgue", -0.375, 0.0, 1.0, 2.0, 8.0, "-3/8"},
      {"sqg_lebesgue", 0.0, 0.0, 0.25, 16.0, 2.0, "-7/2"},
      {"sqg_lebesgue", 0.875, 0.0, 0.25, 8.0, 4.0, "-17/2"},
      {"sqg_lebesgue", 0.125, 0.0, 1.0, 4.0, 4.0, "-9/8"},
      {"sqg_lebesgue", 0.625, 0.0, 0.25, 16.0, 2.0, "-6"},
      {"sqg_lebesgue", 1.0, 0.0, 1.0, 16.0, 8.0, "-21/8"},
      {"sqg_lebesgue", 1.0, 0.0, 1.0, 16.0, 2.0, "-15/8"},
      {"sqg_lebesgue", -0.375, 0.0, 1.0, 4.0, 8.0, "-7/8"},
      {"sqg_lebesgue", 0.0, 0.0, 0.25, 16.0, 8.0, "-13/2"},
      {"sqg_lebesgue", 0.5, 0.0, 0.25, 4.0, 2.0, "-4"},
      {"sqg_lebesgue", 0.375, 0.0, 1.0, 2.0, 2.0, "-3/8"},
  };
  return rows;
}

}  // namespace fraclab::reference
