#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tenpat {

// threads == 1 selects the serial reference path, threads == 0 all hardware
// threads, anything else that many OpenMP threads. Without OpenMP the answer
// is always 1.
inline int resolve_threads(int requested) {
#ifdef _OPENMP
  if (requested < 0) requested = 0;
  if (requested == 0) return omp_get_max_threads();
  return requested;
#else
  (void)requested;
  return 1;
#endif
}

}  // namespace tenpat
