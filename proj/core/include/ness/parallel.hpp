// parallel.hpp - Minimal index-parallel loop over a fixed worker count

#pragma once

#include <cstddef>
#include <functional>

namespace ness {

// Hardware concurrency, at least 1.
std::size_t default_worker_count();

// Calls body(i) for i in [0, n) on up to `workers` threads (0 selects the default).
// Indices are claimed dynamically; results must be written to per-index slots by the
// caller. The first exception thrown by any call is rethrown after all workers join.
void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& body);

} // namespace ness
