"""Exact and sieved fractional divisor sums sigma_alpha, prefix sums,
primorials, prime-power sums, and running suprema."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import DomainError

__all__ = [
    "Alpha",
    "SigmaTable",
    "PrimorialCutoff",
    "SupRecord",
    "sigma_alpha_direct",
    "build_sigma_table",
    "primorial_cutoff",
    "prime_power_sum",
    "sup_sigma_rhs",
    "running_sup",
    "primes_up_to",
]

E_TO_E = math.exp(math.e)


@dataclass(frozen=True)
class Alpha:
    """Fractional exponent of sigma_alpha; must lie in (0, 1).

    The oscillating-series and error-term pipelines additionally require
    alpha < 1/2 (call require_half for that check).
    """

    value: float

    def __post_init__(self):
        if not (0.0 < self.value < 1.0):
            raise DomainError(f"alpha must lie in (0, 1), got {self.value}")

    def require_half(self) -> "Alpha":
        if self.value >= 0.5:
            raise DomainError(
                f"this pipeline requires alpha in (0, 1/2), got {self.value}"
            )
        return self


def sigma_alpha_direct(n: int, alpha: Alpha) -> float:
    """sigma_alpha(n) by direct divisor enumeration (trial division)."""
    if n < 1:
        raise DomainError(f"sigma_alpha_direct requires n >= 1, got {n}")
    a = alpha.value
    small = []
    large = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    divisors = small + large[::-1]
    return math.fsum(float(d) ** a for d in divisors)


@dataclass
class SigmaTable:
    """Dense sigma_alpha values for n = 1..n_max plus prefix sums S(k).

    values[0] and prefix[0] are 0; values[n] = sigma_alpha(n) and
    prefix[k] = S(k) for 1 <= k <= n_max. Immutable once built.
    """

    alpha: Alpha
    n_max: int
    values: np.ndarray
    prefix: np.ndarray = field(repr=False)

    @property
    def backend(self) -> str:
        return kernels.BACKEND

    def value(self, n: int) -> float:
        if not 1 <= n <= self.n_max:
            raise DomainError(f"n={n} outside table range 1..{self.n_max}")
        return float(self.values[n])

    def prefix_at(self, k: int) -> float:
        if not 0 <= k <= self.n_max:
            raise DomainError(f"k={k} outside table range 0..{self.n_max}")
        return float(self.prefix[k])


def build_sigma_table(n_max: int, alpha: Alpha) -> SigmaTable:
    """Sieve sigma_alpha for all n <= n_max (O(n_max log n_max) adds)."""
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    try:
        values = kernels.sigma_sieve(n_max, alpha.value)
    except MemoryError as exc:
        raise MemoryError(
            f"cannot allocate sigma table for n_max={n_max}"
        ) from exc
    values.setflags(write=False)
    prefix = np.cumsum(values)
    prefix.setflags(write=False)
    return SigmaTable(alpha=alpha, n_max=n_max, values=values, prefix=prefix)


def primes_up_to(n: int) -> np.ndarray:
    """Ascending primes <= n (Eratosthenes)."""
    if n < 2:
        return np.empty(0, dtype=np.int64)
    is_p = np.ones(n + 1, dtype=bool)
    is_p[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if is_p[p]:
            is_p[p * p :: p] = False
    return np.nonzero(is_p)[0].astype(np.int64)


@dataclass(frozen=True)
class PrimorialCutoff:
    """Largest prime y with P(y) = prod_{p<=y} p not exceeding some x."""

    y: int
    primorial: int


def primorial_cutoff(x: float) -> PrimorialCutoff:
    """Largest prime y with P(y) <= x, together with P(y)."""
    if x < 2:
        raise DomainError(f"primorial_cutoff requires x >= 2, got {x}")
    # P(y) outgrows any float x after a handful of primes.
    best_y, best_p = 2, 2
    product = 2
    p = 3
    while True:
        while any(p % q == 0 for q in range(2, math.isqrt(p) + 1)):
            p += 2
        if product * p > x:
            return PrimorialCutoff(y=best_y, primorial=best_p)
        product *= p
        best_y, best_p = p, product
        p += 2


def prime_power_sum(y: int, beta: float) -> float:
    """Exact sum over primes p <= y of p^(-beta)."""
    if y < 2:
        raise DomainError(f"prime_power_sum requires y >= 2, got {y}")
    if beta <= 0:
        raise DomainError(f"beta must be positive, got {beta}")
    ps = primes_up_to(y).astype(np.float64)
    return math.fsum(ps ** (-beta))


def sup_sigma_rhs(x: float, alpha: Alpha) -> float:
    """Closed comparator x^a * exp((ln x)^(1-a) / ((1-a) ln ln x)).

    The uncontrolled o(1) in the exponent is set to zero; callers absorb
    it into recorded regression constants.
    """
    if x <= E_TO_E:
        raise DomainError(f"sup_sigma_rhs requires x > e^e, got {x}")
    a = alpha.value
    lx = math.log(x)
    return x**a * math.exp(lx ** (1.0 - a) / ((1.0 - a) * math.log(lx)))


@dataclass(frozen=True)
class SupRecord:
    n: int
    value: float


def running_sup(table: SigmaTable) -> list[SupRecord]:
    """Successive strict maxima of sigma_alpha(n) over n = 1..n_max."""
    vals = table.values
    records = []
    best = -math.inf
    # strict-record positions via a running max scan
    run = np.maximum.accumulate(vals[1:])
    is_rec = np.empty(table.n_max, dtype=bool)
    is_rec[0] = True
    is_rec[1:] = vals[2:] > run[:-1]
    for idx in np.nonzero(is_rec)[0]:
        n = int(idx) + 1
        v = float(vals[n])
        if v > best:
            records.append(SupRecord(n=n, value=v))
            best = v
    return records
