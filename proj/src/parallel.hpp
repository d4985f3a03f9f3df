#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kolmo::detail {

inline int worker_count(int requested) {
#ifdef _OPENMP
    return requested > 0 ? requested : omp_get_max_threads();
#else
    (void)requested;
    return 1;
#endif
}

}  // namespace kolmo::detail
