#ifndef MIRRORMAP_PARALLEL_HPP
#define MIRRORMAP_PARALLEL_HPP

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mirrormap {

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Runs body(i) for i in [0, n). threads <= 1 keeps the plain serial loop,
/// which is the reference path the tests compare against.
template <class F>
void parallel_for(long n, int threads, F&& body) {
  if (threads <= 1) {
    for (long i = 0; i < n; ++i) body(i);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for num_threads(threads) schedule(dynamic)
  for (long i = 0; i < n; ++i) body(i);
#else
  for (long i = 0; i < n; ++i) body(i);
#endif
}

}  // namespace mirrormap

#endif
