#include "fraclab/paraproduct.hpp"

#include <map>

#include "fraclab/besov.hpp"
#include "fraclab/fft.hpp"
#include "fraclab/multiplier.hpp"

namespace fraclab {

namespace {

RealField pointwise_product(const RealField& a, const RealField& b) {
  RealField out(a.grid());
  auto o = out.values();
  const auto av = a.values();
  const auto bv = b.values();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = av[i] * bv[i];
  return out;
}

void accumulate(RealField& sum, const RealField& a, const RealField& b) {
  auto s = sum.values();
  const auto av = a.values();
  const auto bv = b.values();
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += av[i] * bv[i];
}

// Physical-space block fields Delta_j u for j in [lo, hi], computed once.
class BlockCache {
 public:
  BlockCache(const SpectralField& spectrum, const DyadicProfile& profile)
      : spectrum_(spectrum), profile_(profile) {}

  const RealField& block(int j) {
    auto it = blocks_.find(j);
    if (it == blocks_.end()) {
      it = blocks_
               .emplace(j, inverse_transform(project(spectrum_, j, ProjectionKind::block, profile_)))
               .first;
    }
    return it->second;
  }

  RealField low_pass(int j) const {
    return inverse_transform(project(spectrum_, j, ProjectionKind::low_pass, profile_));
  }

 private:
  const SpectralField& spectrum_;
  const DyadicProfile& profile_;
  std::map<int, RealField> blocks_;
};

}  // namespace

SpectralField dealiased_product(const RealField& a, const RealField& b) {
  require_same_grid(a.grid(), b.grid(), "dealiased_product");
  return dealias(forward_transform(pointwise_product(a, b)));
}

BonyPieces bony_decompose(const RealField& f, const RealField& g, const DyadicProfile& profile) {
  require_same_grid(f.grid(), g.grid(), "bony_decompose");
  const Grid2D& grid = f.grid();
  // Delta_j drops k = 0 while S_{j-1} keeps it, so T_f g already holds
  // mean(f) g; only mean(f) mean(g) is left for the remainder.
  const SpectralField f_hat = forward_transform(f);
  const SpectralField g_hat = forward_transform(g);
  const Complex mean_f = f_hat(0, 0);
  const Complex mean_g = g_hat(0, 0);

  const BlockRange range = block_range(grid);
  BlockCache f_blocks(f_hat, profile);
  BlockCache g_blocks(g_hat, profile);

  RealField t_fg(grid);
  RealField t_gf(grid);
  RealField rem(grid);
  for (int j = range.j_min; j <= range.j_max; ++j) {
    accumulate(t_fg, f_blocks.low_pass(j - 1), g_blocks.block(j));
    accumulate(t_gf, g_blocks.low_pass(j - 1), f_blocks.block(j));
    for (int k = j - 1; k <= j + 1; ++k) {
      if (k < range.j_min || k > range.j_max) continue;
      accumulate(rem, f_blocks.block(j), g_blocks.block(k));
    }
  }

  auto finish = [](const RealField& physical) {
    return inverse_transform(dealias(forward_transform(physical)));
  };
  SpectralField rem_hat = dealias(forward_transform(rem));
  rem_hat(0, 0) += (mean_f * mean_g).real();
  return {finish(t_fg), finish(t_gf), inverse_transform(rem_hat)};
}

}  // namespace fraclab
