// parallel.hpp — chunked parallel loop.  Results must be written to per-index
// slots; reductions happen sequentially afterwards so output is independent of
// the thread count.

#pragma once

#include <cstddef>
#include <functional>

namespace hypergeo::util {

// Hardware concurrency capped by the HYPERGEO_THREADS environment variable.
int max_threads();

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace hypergeo::util
