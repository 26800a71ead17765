#ifndef RSABC_PARALLEL_HPP
#define RSABC_PARALLEL_HPP

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rsabc {

/// Execution policy for the data-parallel kernels (separation-candidate
/// evaluation, oracle combination filtering). Results are deterministic
/// under both policies: work items are independent and collected by index.
enum class Exec { serial, openmp };

inline bool openmp_available() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

template <typename Fn>
void par_for(std::size_t n, Exec exec, Fn&& fn) {
    if (exec == Exec::openmp) {
#ifdef _OPENMP
        #pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            fn(static_cast<std::size_t>(i));
        return;
#endif
    }
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace rsabc

#endif
