#pragma once

#include <cstddef>
#include <functional>

namespace nearcube {

/// Worker count from NEARCUBE_THREADS, else the hardware concurrency.
std::size_t default_thread_count();

/// Runs body(i) for i in [0, n) on up to `threads` workers (0 = default).
/// Each index is handled exactly once; callers write results by index, so
/// the outcome does not depend on scheduling. The first exception thrown by
/// any worker is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, std::size_t threads = 0);

}  // namespace nearcube
