#pragma once

#include <cstddef>
#include <functional>

namespace mellinop {

/// Worker count: hardware concurrency, capped by MELLINOP_THREADS when set.
unsigned max_threads();

/// Runs fn(i) for i in [0, n). Iterations must be independent; callers
/// accumulate results afterwards in index order so output is deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace mellinop
