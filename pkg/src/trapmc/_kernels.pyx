# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled event-loop kernels.

Mirror of ``_kernels_py`` with identical semantics and floating-point
association, fused into single passes with early exit.
"""

import numpy as np

BACKEND_NAME = "compiled"


def categorical_from_uniform(double[::1] cum_weights, double[::1] u):
    cdef Py_ssize_t n = cum_weights.shape[0]
    cdef Py_ssize_t k = u.shape[0]
    out = np.empty(k, dtype=np.int64)
    cdef long long[::1] o = out
    cdef double total = cum_weights[n - 1]
    cdef double x
    cdef Py_ssize_t i, lo, hi, mid
    for i in range(k):
        x = u[i] * total
        lo = 0
        hi = n
        while lo < hi:
            mid = (lo + hi) >> 1
            if cum_weights[mid] <= x:
                lo = mid + 1
            else:
                hi = mid
        if lo >= n:
            lo = n - 1
        o[i] = lo
    return out


def sojourn_events(double[::1] values, double[::1] durations,
                   double cum0, bint first, double horizon):
    cdef Py_ssize_t k = durations.shape[0]
    times_arr = np.empty(k, dtype=np.float64)
    vals_arr = np.empty(k, dtype=np.float64)
    cdef double[::1] tv = times_arr
    cdef double[::1] vv = vals_arr
    cdef double run = 0.0
    cdef double t
    cdef Py_ssize_t i, m = 0
    cdef double cum_end
    for i in range(k):
        t = cum0 + run
        if not (first and i == 0):
            if t > horizon:
                return times_arr[:m], vals_arr[:m], i, t, True
            tv[m] = t
            vv[m] = values[i]
            m += 1
        run = run + durations[i]
    cum_end = cum0 + run
    return times_arr[:m], vals_arr[:m], k, cum_end, cum_end > horizon
