#pragma once

#include <cstddef>
#include <functional>

namespace momentangle {

/// Worker count used by parallel_for; defaults to 1.
void set_thread_count(std::size_t count);
[[nodiscard]] std::size_t thread_count();

/// Calls fn(i) for i in [0, n). Results must be written to per-index slots;
/// the first exception thrown by any call is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace momentangle
