#pragma once

#include <cstddef>
#include <functional>

namespace treex {

/// Number of hardware threads, at least 1.
int default_worker_count();

/// Runs fn over [0, n) split into contiguous blocks, one per worker.
/// Workers write to disjoint output slots, so results do not depend on the
/// worker count. workers <= 1 runs inline. Exceptions from workers are
/// rethrown on the calling thread.
void parallel_for(std::size_t n, int workers,
                  const std::function<void(std::size_t begin, std::size_t end)>& fn);

}  // namespace treex
