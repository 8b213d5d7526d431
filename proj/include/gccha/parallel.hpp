#ifndef GCCHA_PARALLEL_HPP
#define GCCHA_PARALLEL_HPP

#include "gccha/types.hpp"

#include <functional>

namespace gccha {

/// Thread cap: GCCHA_THREADS when set (>= 1), otherwise hardware concurrency.
int thread_budget();

/// Runs fn(i) for i in [begin, end). Work is split into contiguous chunks;
/// results must be written to per-index slots so scheduling cannot reorder
/// anything observable. max_threads <= 0 means "use thread_budget()".
void parallel_for(Index begin, Index end, const std::function<void(Index)>& fn,
                  int max_threads = 0);

}  // namespace gccha

#endif
