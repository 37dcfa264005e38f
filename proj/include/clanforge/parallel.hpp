#pragma once

#include <cstddef>
#include <functional>

namespace clanforge {

/// Upper bound on worker threads for internal parallel loops. 0 restores the
/// default (hardware concurrency).
void set_thread_limit(unsigned limit);
unsigned thread_limit();

/// Runs body(i) for i in [0, count) across worker threads. Each index runs
/// exactly once; callers write into per-index slots and reduce in index order
/// afterwards, which keeps results independent of scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace clanforge
