# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: divisor sieve and compensated oscillating sums."""

import numpy as np

cimport numpy as cnp
from libc.math cimport M_PI, cos, floor, pow, sqrt

BACKEND = "cython"

DEF SPLITTER = 134217729.0  # 2^27 + 1
DEF TWO53 = 9007199254740992.0


def sigma_sieve(Py_ssize_t n_max, double alpha):
    """sigma_alpha values for n = 1..n_max; index 0 is unused (0.0)."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    arr = np.zeros(n_max + 1, dtype=np.float64)
    cdef double[::1] v = arr
    cdef Py_ssize_t d, j
    cdef double pd
    with nogil:
        for j in range(1, n_max + 1):
            v[j] = 1.0
        for d in range(2, n_max + 1):
            pd = pow(<double> d, alpha)
            j = d
            while j <= n_max:
                v[j] += pd
                j += d
    return arr


def oscillating_cosine_sum(double[::1] weights, double x):
    """sum_n weights[n-1] * cos(4*pi*sqrt(n*x) - pi/4), Kahan-compensated.

    Exact-integer phase path when 2x is integral and 2*N*x < 2^53; see the
    fallback implementation for the rationale.
    """
    cdef Py_ssize_t n_terms = weights.shape[0]
    if n_terms == 0:
        return 0.0
    cdef double two_x = 2.0 * x
    cdef bint exact = (two_x == floor(two_x)) and (n_terms * two_x < TWO53)
    cdef double acc = 0.0, comp = 0.0
    cdef double nn, v, r, t, rh, rl, p, err, e, two_r, frac, ang, term, y2, tt
    cdef Py_ssize_t i
    with nogil:
        for i in range(n_terms):
            nn = <double> (i + 1)
            if exact:
                v = 0.5 * (nn * two_x)
                r = sqrt(v)
                t = SPLITTER * r
                rh = t - (t - r)
                rl = r - rh
                p = r * r
                err = (rh * rh - p) + 2.0 * rh * rl + rl * rl
                e = ((v - p) - err) / (2.0 * r)
                two_r = 2.0 * r
                frac = two_r - floor(two_r)
                ang = (2.0 * M_PI) * frac + (4.0 * M_PI) * e - 0.25 * M_PI
            else:
                ang = (4.0 * M_PI) * sqrt(nn * x) - 0.25 * M_PI
            term = weights[i] * cos(ang)
            y2 = term - comp
            tt = acc + y2
            comp = (tt - acc) - y2
            acc = tt
    return acc
