"""Main-term evaluation, the error term E_alpha(x) on grids, and the
normalization (x ln x)^(1/4 + alpha/2)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arith import Alpha, SigmaTable
from .errors import DomainError, TableRangeError
from .special import zeta_real

__all__ = [
    "ErrorSample",
    "main_term",
    "error_term",
    "scan_error",
    "scan_grid",
    "corollary_exponent",
    "normalization",
]


@dataclass(frozen=True)
class ErrorSample:
    x: float
    s_value: float
    main: float
    e_value: float
    normalized: float


@lru_cache(maxsize=64)
def _main_coeffs(a: float) -> tuple[float, float]:
    return zeta_real(1.0 + a) / (1.0 + a), zeta_real(1.0 - a)


def main_term(x: float, alpha: Alpha) -> float:
    """x^(1+a) zeta(1+a)/(1+a) + x zeta(1-a).

    The O(1) residue constant -zeta(-a)/2 is absorbed into E_alpha.
    """
    if x <= 0:
        raise DomainError(f"main_term requires x > 0, got {x}")
    c1, c2 = _main_coeffs(alpha.value)
    return c1 * x ** (1.0 + alpha.value) + c2 * x


def normalization(x: float, alpha: Alpha) -> float:
    """(x ln x)^(1/4 + alpha/2), the Omega-theorem scale."""
    if x <= 1:
        raise DomainError(f"normalization requires x > 1, got {x}")
    return (x * math.log(x)) ** (0.25 + 0.5 * alpha.value)


def error_term(x: float, alpha: Alpha, table: SigmaTable) -> ErrorSample:
    """E_alpha(x) = S(floor(x)) - main_term(x), with its normalization."""
    if x <= 1:
        raise DomainError(f"error_term requires x > 1, got {x}")
    m = math.floor(x)
    if m > table.n_max:
        raise TableRangeError(x, table.n_max)
    s_value = table.prefix_at(m)
    main = main_term(x, alpha)
    e_value = s_value - main
    return ErrorSample(
        x=x,
        s_value=s_value,
        main=main,
        e_value=e_value,
        normalized=e_value / normalization(x, alpha),
    )


def scan_grid(x_lo: float, x_hi: float, count: int) -> list[float]:
    """Geometric grid snapped to half-integers, strictly increasing."""
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    if not 1 < x_lo <= x_hi:
        raise DomainError(f"invalid scan range [{x_lo}, {x_hi}]")
    if count == 1 or x_lo == x_hi:
        raw = [x_lo] * count
    else:
        ratio = (x_hi / x_lo) ** (1.0 / (count - 1))
        raw = [x_lo * ratio**i for i in range(count)]
    xs: list[float] = []
    prev = -math.inf
    for g in raw:
        x = math.floor(g) + 0.5
        if x <= prev:
            x = prev + 1.0
        xs.append(x)
        prev = x
    return xs


def scan_error(
    x_lo: float,
    x_hi: float,
    count: int,
    alpha: Alpha,
    table: SigmaTable,
) -> list[ErrorSample]:
    """Error-term samples on a geometric, half-integer-aligned grid."""
    if x_hi > table.n_max:
        raise TableRangeError(x_hi, table.n_max)
    xs = scan_grid(x_lo, x_hi, count)
    if math.floor(xs[-1]) > table.n_max:
        raise TableRangeError(xs[-1], table.n_max)
    return [error_term(x, alpha, table) for x in xs]


def corollary_exponent(alpha: Alpha) -> float:
    """(2a^2 + 3a + 1) / (2a + 3), the intermediate O-bound exponent."""
    a = alpha.value
    return (2.0 * a * a + 3.0 * a + 1.0) / (2.0 * a + 3.0)


def half_integer_error_scan(
    alpha: Alpha, x_max: float, table: SigmaTable
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized E_alpha over every half-integer 1.5, 2.5, ... <= x_max.

    Returns (x, e_value, normalized) arrays; the workhorse behind record
    scans and dyadic-block statistics.
    """
    if x_max < 1.5:
        raise DomainError(f"x_max must be >= 1.5, got {x_max}")
    m_hi = int(math.floor(x_max - 0.5))
    if m_hi > table.n_max:
        raise TableRangeError(x_max, table.n_max)
    m = np.arange(1, m_hi + 1, dtype=np.int64)
    x = m.astype(np.float64) + 0.5
    c1, c2 = _main_coeffs(alpha.value)
    main = c1 * x ** (1.0 + alpha.value) + c2 * x
    e_value = table.prefix[m] - main
    norm = (x * np.log(x)) ** (0.25 + 0.5 * alpha.value)
    return x, e_value, e_value / norm
