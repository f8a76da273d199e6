"""Pure numpy/stdlib implementations of the hot kernels."""

import math

import numpy as np

BACKEND = "fallback"

_TWO53 = float(1 << 53)
_SPLITTER = float((1 << 27) + 1)


def sigma_sieve(n_max: int, alpha: float) -> np.ndarray:
    """sigma_alpha values for n = 1..n_max; index 0 is unused (0.0).

    Divisor-enumeration sieve, accumulation order d = 1..n_max.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    values = np.zeros(n_max + 1, dtype=np.float64)
    values[1:] = 1.0  # divisor d = 1
    for d in range(2, n_max + 1):
        values[d::d] += float(d) ** alpha
    return values


def oscillating_cosine_sum(weights: np.ndarray, x: float) -> float:
    """sum_{n<=N} weights[n-1] * cos(4*pi*sqrt(n*x) - pi/4), fsum-compensated.

    When 2x is integral and 2*N*x < 2^53 the phase is built from the exact
    integer 2nx: one double sqrt plus a Dekker-style correction term, then
    reduced mod 2pi before the cosine, keeping the argument error below
    1e-8 radians.
    """
    n_terms = len(weights)
    if n_terms == 0:
        return 0.0
    n = np.arange(1, n_terms + 1, dtype=np.float64)
    two_x = 2.0 * x
    if two_x == math.floor(two_x) and n_terms * two_x < _TWO53:
        m2 = n * two_x  # exact integer 2nx
        v = 0.5 * m2  # exact: nx
        r = np.sqrt(v)
        # exact r*r = p + err (Dekker two-product)
        t = _SPLITTER * r
        rh = t - (t - r)
        rl = r - rh
        p = r * r
        err = (rh * rh - p) + 2.0 * rh * rl + rl * rl
        e = ((v - p) - err) / (2.0 * r)  # sqrt(v) ~ r + e
        two_r = 2.0 * r
        frac = two_r - np.floor(two_r)  # exact
        ang = (2.0 * math.pi) * frac + (4.0 * math.pi) * e - 0.25 * math.pi
    else:
        ang = (4.0 * math.pi) * np.sqrt(n * x) - 0.25 * math.pi
    return math.fsum(np.asarray(weights, dtype=np.float64) * np.cos(ang))
