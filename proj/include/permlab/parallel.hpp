#ifndef PERMLAB_PARALLEL_HPP
#define PERMLAB_PARALLEL_HPP

#include <functional>

#include "permlab/report.hpp"

namespace permlab {

/// Thread cap from PERMLAB_THREADS (>=1); defaults to 1.
int thread_cap();

/// Runs body(i, report) for i in [0, n), possibly on several threads.
/// Per-index reports are concatenated in index order, so the merged
/// report is deterministic regardless of the thread count.
Report basis_scan(int n, const std::function<void(int, Report&)>& body);

}  // namespace permlab

#endif
