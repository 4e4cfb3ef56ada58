#pragma once

#include <cstddef>
#include <functional>

namespace ehrhart {

// Worker cap: min(jobs, hardware threads, EHRHART_THREADS when set).
unsigned worker_count(std::size_t jobs);

// Runs fn(0..n-1) across workers. Results must be written to disjoint,
// preallocated slots; iteration order is unspecified but coverage is exact,
// so index-addressed output stays deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace ehrhart
