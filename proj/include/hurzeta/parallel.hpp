#pragma once

// Bounded fan-out over independent indices.

#include <cstddef>
#include <functional>

namespace hurzeta {

/// HURZETA_MAX_THREADS if set to a positive integer, else the hardware
/// concurrency (at least 1). Throws ErrorKind::domain on a malformed value.
unsigned max_threads_from_env();

/// Runs fn(i) for i in [0, count) on at most `threads` workers. Exceptions
/// thrown by fn are rethrown (the first one, by index) after all workers join.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace hurzeta
