#pragma once

#include <cstddef>
#include <functional>

namespace halfline {

// Worker count: HALFLINE_THREADS if set (>= 1), otherwise the hardware concurrency.
unsigned thread_count();

// Runs body(i) for i in [0, n) on up to thread_count() threads. Each index is
// handled exactly once, so results written per index are independent of the
// schedule. The first exception thrown by a body is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace halfline
