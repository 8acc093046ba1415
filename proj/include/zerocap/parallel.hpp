#pragma once

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace zerocap {

/// Selects between the OpenMP kernel and the serial reference path of the
/// data-parallel operations. Both paths return identical results.
enum class Exec { serial, parallel };

inline int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace zerocap
