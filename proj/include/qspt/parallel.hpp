#pragma once

/* OpenMP shim. The library builds and runs identically without OpenMP;
 * these stubs keep call sites free of preprocessor noise. */
#if defined(_OPENMP)
#include <omp.h>
#else
inline int omp_get_thread_num() { return 0; }
inline int omp_get_max_threads() { return 1; }
inline void omp_set_num_threads(int) {}
#endif

namespace qspt::parallel {

/* Runtime switch consulted by every parallel kernel. Each kernel keeps a
 * serial path as the reference implementation; tests run both and compare
 * (all arithmetic is exact, so the results must be bit-identical). */
void set_enabled(bool on);
bool enabled();

/* True when a kernel with the given number of independent work items
 * should take its parallel path. */
bool worthwhile(long work_items);

}
