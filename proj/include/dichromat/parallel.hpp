#pragma once

#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dichromat {

/// Thread budget for slice-level parallelism. DICHROMAT_THREADS, when set to a
/// positive integer, caps the OpenMP default.
inline int max_threads() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("DICHROMAT_THREADS")) {
        int cap = std::atoi(env);
        if (cap > 0 && cap < n) n = cap;
    }
    return n;
#else
    return 1;
#endif
}

/// Deterministic parallel reduction: one partial per row, accumulated in row
/// order. The result is independent of the number of threads.
template <class Fn>
double sum_over_rows(int rows, Fn&& per_row) {
    std::vector<double> partial(static_cast<size_t>(rows));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < rows; ++i) partial[static_cast<size_t>(i)] = per_row(i);
    double s = 0.0;
    for (double p : partial) s += p;
    return s;
}

} // namespace dichromat
