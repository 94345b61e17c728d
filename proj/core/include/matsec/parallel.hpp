#pragma once

#include <cstdint>
#include <functional>

namespace matsec {

// Number of fixed-size chunks covering [0, total).
int chunk_count(std::int64_t total, std::int64_t chunk_size);

// Applies fn(begin, end, chunk_index) to every chunk of [0, total), spread
// over up to `threads` workers (0 = hardware concurrency). The chunk layout
// depends only on (total, chunk_size): callers that write per-chunk slots
// and merge them in chunk index order get thread-count-independent results.
void for_each_chunk(std::int64_t total, std::int64_t chunk_size, int threads,
                    const std::function<void(std::int64_t, std::int64_t, int)>& fn);

}  // namespace matsec
