#pragma once

#include <cstddef>
#include <functional>

namespace splitkit {

/// Worker count: SPLITKIT_THREADS when set (clamped to >= 1), otherwise the
/// machine default.
int worker_count();

/// Runs fn(begin, end) over a fixed, deterministic chunking of [0, count)
/// across worker threads. Chunk boundaries do not depend on timing, so
/// per-chunk results can be merged in chunk order for reproducible output.
void parallel_chunks(std::size_t count,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace splitkit
