#pragma once

#include <cstddef>
#include <functional>

namespace rct {

/// RCT_THREADS when set to a positive integer, otherwise the hardware
/// concurrency (at least 1).
int thread_count();

/// Calls body(i) for i in [0, n) on up to `threads` threads (0 means
/// thread_count()). Indices are split into contiguous blocks; callers write
/// into preallocated slots so results do not depend on scheduling. The first
/// exception thrown by any block is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, int threads = 0);

}  // namespace rct
