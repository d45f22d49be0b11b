#pragma once

#include <cstddef>
#include <functional>

namespace cdpauth {

// Worker cap honoring the CDP_AUTHKIT_THREADS environment variable
// (default: hardware concurrency).
std::size_t worker_count();

// Runs fn(begin, end) over a partition of [0, n). Each index is processed by
// exactly one worker with the same per-index arithmetic regardless of the
// thread count, so results are bit-identical for any CDP_AUTHKIT_THREADS.
// Callers must only write to disjoint, index-owned locations.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

} // namespace cdpauth
