#pragma once

// Deterministic data-parallel helper.  Work is split into contiguous index
// ranges, each worker writes only to its own slots, and every reduction over
// the results happens sequentially afterwards - so outputs are bit-identical
// to a sequential run regardless of thread count.
//
// The environment variable BIQUAD_THREADS caps the worker count
// (unset or 0 -> hardware concurrency, 1 -> run inline).

#include <cstddef>
#include <functional>

namespace biquad {

// Effective worker count after applying the BIQUAD_THREADS cap.
int thread_cap();

// Invokes fn(begin, end) over a partition of [0, n); chunks run on separate
// threads when worthwhile.  fn must only touch state owned by its range.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

} // namespace biquad
