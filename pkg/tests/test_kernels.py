"""Parity between the compiled kernel backend and the pure-Python
fallback, plus direct checks of the oscillating-sum phase handling."""

import math

import mpmath
import numpy as np
import pytest

from sigmalab import kernels
from sigmalab.kernels import _fallback

mpmath.mp.dps = 30


def test_backend_identifies_itself():
    assert kernels.BACKEND in ("cython", "fallback")
    assert _fallback.BACKEND == "fallback"


def test_sigma_sieve_parity():
    for alpha in (0.1, 0.25, 0.4):
        active = np.asarray(kernels.sigma_sieve(20000, alpha))
        fallback = _fallback.sigma_sieve(20000, alpha)
        np.testing.assert_allclose(active, fallback, rtol=1e-14, atol=0.0)


@pytest.mark.parametrize("x", [157.5, 1000.5, 999999.5, 777.25])
def test_oscillating_sum_parity(x):
    w = np.arange(1, 3001, dtype=np.float64) ** -0.875
    a = kernels.oscillating_cosine_sum(w, x)
    b = _fallback.oscillating_cosine_sum(w, x)
    assert abs(a - b) < 1e-12 * max(1.0, abs(b))


def test_oscillating_sum_against_mpmath():
    # both backends vs a 30-digit recomputation at a large half integer,
    # where the naive float phase alone would lose ~1e-5 radians
    x = mpmath.mpf("999999.5")
    w = np.arange(1, 101, dtype=np.float64) ** -0.875
    want = mpmath.fsum(
        mpmath.mpf(float(w[n - 1]))
        * mpmath.cos(4 * mpmath.pi * mpmath.sqrt(n * x) - mpmath.pi / 4)
        for n in range(1, 101)
    )
    for impl in (kernels.oscillating_cosine_sum, _fallback.oscillating_cosine_sum):
        assert abs(impl(w, 999999.5) - float(want)) < 1e-9


def test_oscillating_sum_empty():
    w = np.empty(0, dtype=np.float64)
    assert kernels.oscillating_cosine_sum(w, 10.5) == 0.0
    assert _fallback.oscillating_cosine_sum(w, 10.5) == 0.0


def test_non_half_integer_path():
    # x with non-integer 2x takes the plain-phase branch; cross-check at
    # modest size where that branch is still accurate
    x = 123.456
    w = np.arange(1, 51, dtype=np.float64) ** -0.875
    want = math.fsum(
        w[n - 1] * math.cos(4.0 * math.pi * math.sqrt(n * x) - 0.25 * math.pi)
        for n in range(1, 51)
    )
    assert abs(kernels.oscillating_cosine_sum(w, x) - want) < 1e-10
