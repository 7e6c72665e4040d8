#pragma once

#include <cstddef>
#include <functional>

namespace derivlab {

/// Resolves the worker count: DERIVLAB_WORKERS env var wins, then the
/// requested value, then hardware concurrency. Always at least 1.
unsigned effective_workers(unsigned requested = 0);

/// Runs chunk_fn(begin, end) over a static partition of [0, count) on
/// `workers` threads (0 = hardware concurrency; env resolution is the
/// caller's job via effective_workers). Exceptions are captured and
/// rethrown on the caller once all workers join.
void parallel_chunks(std::size_t count, unsigned workers,
                     const std::function<void(std::size_t, std::size_t)>& chunk_fn);

} // namespace derivlab
