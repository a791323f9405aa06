#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "fraclab/besov.hpp"
#include "fraclab/bsvf.hpp"
#include "fraclab/experiment/record.hpp"
#include "fraclab/fft.hpp"
#include "fraclab/initial_data.hpp"
#include "fraclab/keller_segel.hpp"
#include "fraclab/multiplier.hpp"
#include "fraclab/oracle.hpp"
#include "fraclab/paraproduct.hpp"
#include "fraclab/semigroup.hpp"
#include "fraclab/sqg.hpp"

namespace fraclab::experiment {

namespace {

// Band-limited, Hermitian, mean-free test field with unit B^0_{2,2} norm.
SpectralField random_field(const Grid2D& grid, std::uint64_t seed, double cutoff = 8.0) {
  InitialSpectrum spec;
  spec.amplitude = 1.0;
  spec.cutoff = cutoff;
  spec.seed = seed;
  return make_initial_spectrum(grid, spec, BesovParams{0.0, 2.0, 2.0}, DyadicProfile{});
}

double l2(const SpectralField& f) { return std::sqrt(spectral_l2_squared(f)); }

std::string sci(double v) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << v;
  return out.str();
}

// Returns the detail string; passes when `error <= bound`.
Check bounded_check(const std::string& name, double error, double bound) {
  return {name, error <= bound, "max error " + sci(error) + " (bound " + sci(bound) + ")"};
}

using Suite = std::vector<std::pair<std::string, std::function<Check(std::uint64_t)>>>;

Suite suite() {
  const DyadicProfile profile;
  const Grid2D g64(64, 2.0 * std::numbers::pi);
  Suite s;

  s.push_back({"partition_of_unity", [=](std::uint64_t) {
                 double worst = 0.0;
                 for (int i = 0; i < 10000; ++i) {
                   const double r = std::exp2(-20.0 + 40.0 * i / 9999.0);
                   double sum = 0.0;
                   for (int j = -25; j <= 25; ++j) sum += profile.block(j, r);
                   worst = std::max(worst, std::abs(sum - 1.0));
                 }
                 return bounded_check("partition_of_unity", worst, 1e-10);
               }});

  s.push_back({"fft_roundtrip_and_parseval", [=](std::uint64_t seed) {
                 const RealField f = inverse_transform(random_field(g64, seed));
                 const SpectralField c = forward_transform(f);
                 const RealField back = inverse_transform(c);
                 double worst = 0.0, energy = 0.0;
                 for (std::size_t i = 0; i < f.values().size(); ++i) {
                   worst = std::max(worst, std::abs(back.values()[i] - f.values()[i]));
                   energy += f.values()[i] * f.values()[i];
                 }
                 const double h = g64.spacing();
                 const double parseval =
                     std::abs(h * h * energy - spectral_l2_squared(c)) / spectral_l2_squared(c);
                 return bounded_check("fft_roundtrip_and_parseval",
                                      std::max({worst, parseval, hermitian_defect(c)}), 1e-12);
               }});

  s.push_back({"riesz_identity", [=](std::uint64_t seed) {
                 const SpectralField f = random_field(g64, seed);
                 SpectralField sum = apply_fourier_multiplier(
                     apply_fourier_multiplier(f, MultiplierSpec::riesz(1)), MultiplierSpec::riesz(1));
                 sum += apply_fourier_multiplier(
                     apply_fourier_multiplier(f, MultiplierSpec::riesz(2)), MultiplierSpec::riesz(2));
                 sum += f;
                 return bounded_check("riesz_identity", l2(sum) / l2(f), 1e-12);
               }});

  s.push_back({"fractional_laplacian_composition", [=](std::uint64_t seed) {
                 const SpectralField f = random_field(g64, seed);
                 const SpectralField a = apply_fourier_multiplier(
                     apply_fourier_multiplier(f, MultiplierSpec::fractional_laplacian(0.7)),
                     MultiplierSpec::fractional_laplacian(0.6));
                 const SpectralField b =
                     apply_fourier_multiplier(f, MultiplierSpec::fractional_laplacian(1.3));
                 return bounded_check("fractional_laplacian_composition", l2(a - b) / l2(b), 1e-12);
               }});

  s.push_back({"block_orthogonality", [=](std::uint64_t seed) {
                 const SpectralField f = random_field(g64, seed, 1e3);
                 const BlockRange range = block_range(g64);
                 double worst = 0.0;
                 for (int i = range.j_min; i <= range.j_max; ++i) {
                   const SpectralField bi = project(f, i, ProjectionKind::block, profile);
                   for (int j = i + 2; j <= range.j_max; ++j) {
                     worst = std::max(worst,
                                      l2(project(bi, j, ProjectionKind::block, profile)) / l2(f));
                   }
                 }
                 return bounded_check("block_orthogonality", worst, 1e-12);
               }});

  s.push_back({"besov_homogeneity", [=](std::uint64_t seed) {
                 const SpectralField f = random_field(g64, seed);
                 double worst = 0.0;
                 for (const BesovParams& b : {BesovParams{1.0, 2.0, 1.0}, BesovParams{-0.5, 3.0, 2.0},
                                              BesovParams{0.0, 2.0, kInfinity}}) {
                   const double n1 = besov_norm(f, b, profile).value;
                   const double n2 = besov_norm(-2.5 * f, b, profile).value;
                   worst = std::max(worst, std::abs(n2 - 2.5 * n1) / n1);
                 }
                 return bounded_check("besov_homogeneity", worst, 1e-12);
               }});

  s.push_back({"besov_interpolation", [=](std::uint64_t seed) {
                 const SpectralField f = random_field(g64, seed);
                 double worst = 0.0;
                 for (double theta : {0.25, 0.5, 0.75}) {
                   const double s = -theta + (1.0 - theta);
                   const double lhs = besov_norm(f, {s, 2.0, 2.0}, profile).value;
                   const double rhs = std::pow(besov_norm(f, {-1.0, 2.0, 2.0}, profile).value, theta) *
                                      std::pow(besov_norm(f, {1.0, 2.0, 2.0}, profile).value, 1.0 - theta);
                   worst = std::max(worst, lhs / rhs - 1.0);
                 }
                 return bounded_check("besov_interpolation", std::max(worst, 0.0), 1e-10);
               }});

  s.push_back({"bony_reconstruction", [=](std::uint64_t seed) {
                 const RealField f = inverse_transform(random_field(g64, seed));
                 const RealField g = inverse_transform(random_field(g64, seed + 7919));
                 const BonyPieces pieces = bony_decompose(f, g, profile);
                 const SpectralField product = dealiased_product(f, g);
                 SpectralField sum = forward_transform(pieces.paraproduct_fg);
                 sum += forward_transform(pieces.paraproduct_gf);
                 sum += forward_transform(pieces.remainder);
                 return bounded_check("bony_reconstruction", l2(sum - product) / l2(product), 1e-8);
               }});

  s.push_back({"semigroup_property", [=](std::uint64_t seed) {
                 const SpectralField f = random_field(g64, seed);
                 const SpectralField a = evolve_linear(evolve_linear(f, 1.5, 0.3), 1.5, 0.2);
                 const SpectralField b = evolve_linear(f, 1.5, 0.5);
                 const bool contracts = l2(b) <= l2(f);
                 Check c = bounded_check("semigroup_property", l2(a - b) / l2(b), 1e-12);
                 c.passed = c.passed && contracts;
                 return c;
               }});

  s.push_back({"oracle_block_monotone", [=](std::uint64_t) {
                 const auto ball = RadialSpectralDensity::ball_indicator(2, 1.0);
                 bool ok = true;
                 for (int j = -6; j <= 0; ++j) {
                   double prev = oracle_block_norm(ball, j, 0.0, 1.0, profile);
                   for (double t : {0.5, 2.0, 8.0, 32.0}) {
                     const double cur = oracle_block_norm(ball, j, t, 1.0, profile);
                     ok = ok && cur <= prev * (1.0 + 1e-12);
                     prev = cur;
                   }
                 }
                 return Check{"oracle_block_monotone", ok, ok ? "nonincreasing" : "increase found"};
               }});

  s.push_back({"exponent_consistency", [=](std::uint64_t) {
                 bool ok = true;
                 for (double p : {2.0, 3.0, 4.0, 8.0}) {
                   for (double r = 2.0; r <= p; r += 1.0) {
                     DecayClaim a{ClaimKind::sqg, 1.0, -1.0 + 2.0 / p, 1.0, p, r};
                     DecayClaim b = a;
                     b.kind = ClaimKind::keller_segel;
                     ok = ok && theoretical_exponent(a) == theoretical_exponent(b);
                   }
                 }
                 return Check{"exponent_consistency", ok, ok ? "sqg at alpha = 1 equals keller_segel" : "mismatch"};
               }});

  s.push_back({"fit_invariance", [=](std::uint64_t) {
                 NormSeries exact{"exact", "", {}, {}};
                 for (int i = 0; i < 40; ++i) {
                   const double t = std::pow(10.0, 1.0 + 3.0 * i / 39.0);
                   exact.times.push_back(t);
                   exact.values.push_back(std::pow(1.0 + t, -2.0));
                 }
                 NormSeries scaled = exact;
                 for (double& v : scaled.values) v *= 7.0;
                 const FitResult a = fit_decay_slope(exact, {10.0, 1e4});
                 const FitResult b = fit_decay_slope(scaled, {10.0, 1e4});
                 const FitResult sub = fit_decay_slope(exact, {100.0, 1e4});
                 const double err = std::max({std::abs(a.slope + 2.0), std::abs(b.slope - a.slope),
                                              std::abs(sub.slope + 2.0), a.residual});
                 return bounded_check("fit_invariance", err, 1e-10);
               }});

  s.push_back({"sqg_structure", [=](std::uint64_t seed) {
                 SpectralField theta = random_field(g64, seed);
                 theta *= 0.1;
                 const RealField th = inverse_transform(theta);
                 const sqg::Velocity u = sqg::velocity(th);
                 const SpectralField div =
                     apply_fourier_multiplier(forward_transform(u.u1), MultiplierSpec::partial(1)) +
                     apply_fourier_multiplier(forward_transform(u.u2), MultiplierSpec::partial(2));
                 sqg::State state{theta, 0.0, 1.0};
                 const double l2_0 = l2(theta);
                 for (int k = 0; k < 20; ++k) state = sqg::step(state, 0.01);
                 const double err = std::max(l2(div) / l2_0, std::abs(state.theta(0, 0)));
                 Check c = bounded_check("sqg_structure", err, 1e-12);
                 c.passed = c.passed && l2(state.theta) <= l2_0;
                 return c;
               }});

  s.push_back({"ks_mass_conservation", [=](std::uint64_t seed) {
                 SpectralField u = random_field(g64, seed);
                 u *= 0.1;
                 u(0, 0) = 0.5;
                 ks::State state{u, 0.0, 1.0};
                 const double m0 = ks::mass(state.physical());
                 for (int k = 0; k < 20; ++k) state = ks::step(state, 0.01);
                 const double m1 = ks::mass(state.physical());
                 return bounded_check("ks_mass_conservation", std::abs(m1 - m0) / std::abs(m0), 1e-12);
               }});

  s.push_back({"bsvf_roundtrip", [=](std::uint64_t seed) {
                 const RealField f = inverse_transform(random_field(g64, seed));
                 std::stringstream buffer;
                 write_bsvf(buffer, f);
                 const RealField back = read_bsvf(buffer);
                 bool same = back.grid() == f.grid();
                 for (std::size_t i = 0; same && i < f.values().size(); ++i) {
                   same = back.values()[i] == f.values()[i];
                 }
                 return Check{"bsvf_roundtrip", same, same ? "bitwise equal" : "mismatch"};
               }});

  s.push_back({"config_roundtrip", [=](std::uint64_t) {
                 bool ok = true;
                 for (Kind k : {Kind::oracle, Kind::linear, Kind::sqg, Kind::ks, Kind::besov,
                                Kind::selftest}) {
                   const ExperimentConfig c = default_config(k);
                   ok = ok && parse_config(to_json(c).dump()) == c;
                 }
                 return Check{"config_roundtrip", ok, ok ? "echo reparses equal" : "mismatch"};
               }});
  return s;
}

}  // namespace

std::vector<Check> run_selftest(std::uint64_t seed) {
  std::vector<Check> checks;
  for (const auto& [name, body] : suite()) {
    try {
      checks.push_back(body(seed));
    } catch (const std::exception& e) {
      checks.push_back({name, false, std::string("threw: ") + e.what()});
    }
  }
  return checks;
}

}  // namespace fraclab::experiment
