#pragma once

#include <cstddef>
#include <functional>

namespace ionscope {

/// Worker thread budget: IONSCOPE_THREADS when set (values < 1 mean 1),
/// otherwise the hardware concurrency.
int thread_count();

/// Runs fn(i) for every i in [0, n), partitioned into contiguous index
/// chunks across threads. Each index owns its output slot, so results are
/// identical for any thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace ionscope
