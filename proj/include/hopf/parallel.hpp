#pragma once

#include <cstddef>
#include <functional>

namespace hopf {

/// Worker count: HOPF_FORGE_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t thread_budget();

/// Runs body(i) for i in [0, n) on up to thread_budget() threads. Each index
/// runs exactly once; callers write results by index, so output order does
/// not depend on scheduling. The first exception is rethrown after all
/// workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hopf
