#pragma once

#include <cstddef>
#include <functional>

namespace longcycle {

/// Worker count: `requested` if nonzero, else $LONGCYCLE_THREADS, else the
/// hardware concurrency (at least 1).
[[nodiscard]] unsigned resolve_threads(unsigned requested);

/// Calls body(i) for i in [0, count) on up to `threads` workers. Indices
/// are handed out dynamically; the first exception is rethrown.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace longcycle
