#pragma once

#include <cstddef>
#include <functional>

namespace octjordan {

// Runs fn(0..n-1) on up to `jobs` threads (jobs <= 0: hardware concurrency).
// Results must be written by index; the first exception by index is rethrown.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace octjordan
