#pragma once

#include <cstddef>
#include <functional>

namespace xch {

// Worker count for parallel_for; 1 runs everything inline.
void set_thread_count(std::size_t n);
std::size_t thread_count();

// Runs fn(0..count-1) on up to thread_count() threads. Results must go into
// per-index slots so the outcome does not depend on scheduling. The exception
// from the lowest failing index is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace xch
