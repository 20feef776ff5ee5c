#ifndef LCS_PARALLEL_HPP
#define LCS_PARALLEL_HPP

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lcs {

// Runs fn(0..n-1), in parallel when requested and OpenMP is available.
// Callers index into pre-sized output slots, so the merge order is fixed by
// the index and the result never depends on the schedule.
template <typename F>
void parallel_for_index(std::size_t n, bool parallel, F&& fn) {
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      fn(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace lcs

#endif
