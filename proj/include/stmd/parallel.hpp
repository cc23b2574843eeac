/// Deterministic row parallelism: [0,n) is split into contiguous chunks, one
/// per worker, so results never depend on the worker count. STMD_THREADS caps
/// the number of workers.
#pragma once

#include <functional>

namespace stmd {

/// Worker count: min(STMD_THREADS if set, hardware_concurrency), at least 1.
int worker_count();

/// Runs fn(begin, end) over disjoint contiguous chunks covering [0, n).
/// Runs inline when a single worker suffices.
void parallel_chunks(int n, const std::function<void(int, int)>& fn);

}  // namespace stmd
