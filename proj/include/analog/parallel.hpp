#pragma once

#include <cstddef>
#include <functional>

namespace analog {

/// Worker count for row-parallel sweeps: hardware concurrency, capped by the
/// ANALOG_BENCH_THREADS environment variable when set to a positive integer.
std::size_t worker_count();

/// Runs body(i) for i in [0, n). Rows may run concurrently; if any call
/// throws, the exception from the lowest index is rethrown after all
/// workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace analog
