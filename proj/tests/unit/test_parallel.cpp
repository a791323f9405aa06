#include <gtest/gtest.h>

#include <atomic>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fraclab/besov.hpp"
#include "fraclab/parallel.hpp"
#include "oracles.hpp"

using namespace fraclab;

TEST(Parallel, EveryIndexOnce) {
  set_thread_count(4);
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  set_thread_count(1);
}

TEST(Parallel, PropagatesExceptions) {
  set_thread_count(3);
  EXPECT_THROW(parallel_for(50,
                            [](std::size_t i) {
                              if (i == 17) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
  set_thread_count(1);
}

TEST(Parallel, ResultsIndependentOfThreadCount) {
  const Grid2D g(64, 2.0 * std::numbers::pi);
  const SpectralField f = reference::lcg_spectrum(g, 8, 20);
  const DyadicProfile profile;
  set_thread_count(1);
  const double one = besov_norm(f, {0.5, 3.0, 2.0}, profile).value;
  set_thread_count(4);
  const double four = besov_norm(f, {0.5, 3.0, 2.0}, profile).value;
  set_thread_count(1);
  EXPECT_EQ(one, four);
}

TEST(Parallel, ZeroSelectsHardwareConcurrency) {
  set_thread_count(0);
  EXPECT_GE(thread_count(), 1u);
  set_thread_count(1);
  EXPECT_EQ(thread_count(), 1u);
}
