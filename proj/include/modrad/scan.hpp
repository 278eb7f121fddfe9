#pragma once

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#else
inline int omp_get_max_threads() { return 1; }
inline int omp_get_thread_num() { return 0; }
#endif

namespace modrad::scan {

inline int max_threads() { return omp_get_max_threads(); }

// Smallest i in [0,n) with pred(i) true, or -1. pred must be pure.
// Blocks grow geometrically so an early hit stays cheap and a full sweep
// pays almost no scheduling overhead; the min-reduction keeps the result
// independent of the thread count.
template <class Pred>
long find_first(long n, Pred pred) {
#ifdef _OPENMP
  long block = 1L << 14;
  for (long base = 0; base < n; base += block, block = std::min(block * 4, 1L << 22)) {
    const long hi = std::min(n, base + block);
    long best = hi;
#pragma omp parallel for reduction(min : best) schedule(static)
    for (long i = base; i < hi; ++i) {
      if (i < best && pred(i)) best = i;
    }
    if (best < hi) return best;
  }
  return -1;
#else
  for (long i = 0; i < n; ++i)
    if (pred(i)) return i;
  return -1;
#endif
}

// body(i) for all i in [0,n); bodies must be independent.
template <class Body>
void parallel_for(long n, Body body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long i = 0; i < n; ++i) body(i);
}

}  // namespace modrad::scan
