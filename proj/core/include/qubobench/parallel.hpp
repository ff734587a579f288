#pragma once

#include <cstddef>
#include <functional>

namespace qubobench {

/// Worker count: hardware concurrency capped by the QUBOBENCH_THREADS
/// environment variable (values < 1 are ignored).
int hardware_workers();

/// Runs fn(i) for i in [0, n) on a pool of worker threads. Each index is
/// processed exactly once; callers write results into per-index slots, so the
/// output is identical to a serial loop. n_threads <= 0 selects
/// hardware_workers().
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int n_threads = 0);

}  // namespace qubobench
