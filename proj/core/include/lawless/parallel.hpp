#pragma once

#include <cstddef>
#include <functional>

namespace lawless {

/// Worker count: LAWBENCH_THREADS if set and positive, otherwise the
/// hardware concurrency (at least 1).
unsigned thread_count();

/// Runs body(i) for i in [0, n) on up to thread_count() threads. Indices are
/// handed out in contiguous blocks; the first exception thrown is rethrown
/// after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace lawless
