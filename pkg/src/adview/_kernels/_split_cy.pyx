# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled best-split scan over one presorted feature.

Must stay bit-identical to _split_py.scan_feature: sequential prefix sums in
the same order, the same SSE expression tree, strict-less tie handling (first
minimum wins, i.e. the lowest threshold). Compiled without -ffast-math or
-march so the compiler cannot reassociate or contract into FMA.
"""

from libc.math cimport INFINITY


def scan_feature(const double[::1] x_sorted, const double[::1] y_sorted, Py_ssize_t min_leaf):
    """Best (threshold, total child SSE) split, or None if no valid candidate."""
    cdef Py_ssize_t n = x_sorted.shape[0]
    cdef Py_ssize_t i, n_left, best_index = -1
    cdef double total_sum = 0.0, total_sumsq = 0.0
    cdef double run_sum = 0.0, run_sumsq = 0.0
    cdef double right_sum, sse, sse_left, sse_right
    cdef double best_sse = INFINITY, best_threshold = 0.0

    if n < 2:
        return None

    with nogil:
        for i in range(n):
            total_sum = total_sum + y_sorted[i]
            total_sumsq = total_sumsq + y_sorted[i] * y_sorted[i]
        for i in range(n - 1):
            run_sum = run_sum + y_sorted[i]
            run_sumsq = run_sumsq + y_sorted[i] * y_sorted[i]
            if x_sorted[i] == x_sorted[i + 1]:
                continue
            n_left = i + 1
            if n_left < min_leaf or n - n_left < min_leaf:
                continue
            sse_left = run_sumsq - run_sum * run_sum / (<double> n_left)
            right_sum = total_sum - run_sum
            sse_right = (total_sumsq - run_sumsq) - right_sum * right_sum / (<double> (n - n_left))
            sse = sse_left + sse_right
            if sse < best_sse:
                best_sse = sse
                best_index = i
                best_threshold = (x_sorted[i] + x_sorted[i + 1]) / 2.0

    if best_index < 0:
        return None
    return best_threshold, best_sse
