#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace survlime {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// OpenMP loop over [0, n). Bodies must write disjoint state per index and the
// combined result must not depend on execution order; every kernel built on
// this has a serial reference twin checked for exact equality in the tests.
template <typename F>
void parallel_for(std::size_t n, F&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    body(static_cast<std::size_t>(i));
  }
#else
  for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

// Serial reference loop.
template <typename F>
void serial_for(std::size_t n, F&& body) {
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace survlime
