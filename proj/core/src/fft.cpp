#include "fraclab/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <utility>

namespace fraclab {

namespace {

// FFTW planning is not thread-safe; execution through the new-array interface
// is. Plans are built once per (n, sign) with FFTW_UNALIGNED so any std::vector
// buffer may be passed at execution time.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  fftw_plan get(int n, int sign) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    std::vector<Complex> scratch(static_cast<std::size_t>(n) * n);
    auto* data = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_dft_2d(n, n, data, data, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, plan);
    return plan;
  }

  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

void execute(int n, int sign, std::vector<Complex>& data) {
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(PlanCache::instance().get(n, sign), ptr, ptr);
}

}  // namespace

SpectralField forward_transform(const RealField& field) {
  field.require_finite();
  const Grid2D& grid = field.grid();
  std::vector<Complex> data(field.values().begin(), field.values().end());
  execute(grid.n(), FFTW_FORWARD, data);
  const double scale = 1.0 / static_cast<double>(grid.size());
  for (auto& c : data) c *= scale;
  return SpectralField(grid, std::move(data));
}

CheckedInverse inverse_transform_checked(const SpectralField& field) {
  const Grid2D& grid = field.grid();
  std::vector<Complex> data(field.coefficients().begin(), field.coefficients().end());
  execute(grid.n(), FFTW_BACKWARD, data);
  std::vector<double> values(data.size());
  double max_real = 0.0;
  double max_imag = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    values[i] = data[i].real();
    max_real = std::max(max_real, std::abs(data[i].real()));
    max_imag = std::max(max_imag, std::abs(data[i].imag()));
  }
  const double residue = max_real > 0.0 ? max_imag / max_real : max_imag;
  return {RealField(grid, std::move(values)), residue};
}

RealField inverse_transform(const SpectralField& field) {
  return inverse_transform_checked(field).field;
}

}  // namespace fraclab
