#pragma once

#include <cstddef>
#include <functional>

namespace bicomm {

/// Worker count: set_thread_count() if called, else BICOMM_THREADS, else the
/// hardware concurrency. Always at least 1.
std::size_t thread_count();
void set_thread_count(std::size_t n);

/// Runs body(i) for i in [0, n) on up to thread_count() threads. Each index
/// runs exactly once; callers write results into per-index slots so the
/// outcome does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace bicomm
