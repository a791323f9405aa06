#pragma once

#include <cstddef>
#include <functional>

namespace fraclab {

/// Number of worker threads used by parallel_for. 0 selects the hardware
/// concurrency.
void set_thread_count(unsigned count);
unsigned thread_count();

/// Runs body(i) for i in [0, count). Each index is processed exactly once and
/// results must be written to per-index slots; the caller performs any
/// reduction afterwards in index order, which keeps outputs independent of
/// the worker count. The first exception thrown by any body is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace fraclab
