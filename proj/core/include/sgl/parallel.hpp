#pragma once

#include <cstddef>
#include <functional>

namespace sgl {

/// Number of hardware threads, at least 1.
unsigned default_thread_count();

/// Splits [0, count) into contiguous chunks and runs fn(begin, end) on up to
/// `threads` workers. Chunk boundaries depend only on count and the number of
/// workers actually used, and every index is handled exactly once, so callers
/// that write disjoint output slices get results that are bitwise independent
/// of the thread count. threads == 0 means default_thread_count().
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace sgl
