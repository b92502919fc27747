#pragma once

#include <cstdint>
#include <functional>

namespace commtuple {

/// Worker cap: COMMTUPLE_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
int worker_count();

/// Splits [0, total) into contiguous chunks and runs body(chunk_index, first,
/// last) on up to worker_count() threads. Returns the number of chunks so
/// callers can reduce per-chunk results in chunk order.
int parallel_chunks(std::uint64_t total,
                    const std::function<void(int, std::uint64_t, std::uint64_t)>& body);

/// Chunk count parallel_chunks will use for `total` items.
int chunk_count(std::uint64_t total);

}  // namespace commtuple
