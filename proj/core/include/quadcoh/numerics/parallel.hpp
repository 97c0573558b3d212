#pragma once

#include <cstddef>
#include <functional>

namespace quadcoh {

// Worker cap: QUADCOH_THREADS if set (>=1), otherwise hardware concurrency.
int max_threads();

// Static block partition of [0, count) over at most max_threads() workers.
// Bodies must write to disjoint slots; reductions happen afterwards in a
// fixed order, so parallelism never changes results.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace quadcoh
