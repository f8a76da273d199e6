"""Soundararajan's resonance lemma on concrete finite instances, plus
record hunting for the normalized error term."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .arith import Alpha, SigmaTable
from .errorterm import half_integer_error_scan
from .errors import DomainError, SigmaLabError

__all__ = [
    "ResonanceInstance",
    "RecordEntry",
    "RecordList",
    "VerificationFailure",
    "resonance_sum",
    "resonance_bound",
    "resonance_verify",
    "divisor_instance",
    "record_scan",
]


class VerificationFailure(SigmaLabError):
    """No grid point reached the lemma bound.

    budget_exhausted distinguishes "search was cut short" from "the lemma
    looks contradicted at this grid resolution".
    """

    def __init__(self, max_found: float, at_x: float, bound: float,
                 budget_exhausted: bool):
        self.max_found = max_found
        self.at_x = at_x
        self.bound = bound
        self.budget_exhausted = budget_exhausted
        reason = "budget exhausted" if budget_exhausted else "interval exhausted"
        super().__init__(
            f"no qualifying point ({reason}): max |S| = {max_found!r} at "
            f"x = {at_x!r}, bound = {bound!r}"
        )


@dataclass(frozen=True)
class ResonanceInstance:
    """Finite data of the resonance lemma.

    coeffs[i] is f(i+1) and freqs[i] is lambda_{i+1}; indices in
    resonant_set and y_index are 1-based to match that convention.
    """

    coeffs: tuple[float, ...]
    freqs: tuple[float, ...]
    phase: float
    resonant_set: frozenset[int]
    big_l: int
    y_index: int
    big_x: float

    def __post_init__(self):
        if len(self.coeffs) != len(self.freqs):
            raise DomainError("coeffs and freqs must have equal length")
        if not self.coeffs:
            raise DomainError("instance needs at least one term")
        if any(c < 0 for c in self.coeffs):
            raise DomainError("coefficients must be nonnegative")
        if any(f < 0 for f in self.freqs):
            raise DomainError("frequencies must be nonnegative")
        if any(b > a for a, b in zip(self.freqs[1:], self.freqs)):
            raise DomainError("frequencies must be non-decreasing")
        if self.big_l < 2:
            raise DomainError(f"L must be >= 2, got {self.big_l}")
        if not 1 <= self.y_index <= len(self.freqs):
            raise DomainError(f"Y index {self.y_index} out of range")
        if self.big_x < 2:
            raise DomainError(f"X must be >= 2, got {self.big_x}")
        lam_y = self.lambda_y
        for m in self.resonant_set:
            if not 1 <= m <= len(self.freqs):
                raise DomainError(f"resonant index {m} out of range")
            lam = self.freqs[m - 1]
            if not lam_y / 2.0 <= lam <= 1.5 * lam_y:
                raise DomainError(
                    f"lambda_{m} = {lam} outside [lambda_Y/2, 3 lambda_Y/2] "
                    f"= [{lam_y / 2.0}, {1.5 * lam_y}]"
                )

    @property
    def lambda_y(self) -> float:
        return self.freqs[self.y_index - 1]

    def interval(self) -> tuple[float, float]:
        """Search interval [X/2, (6L)^(|M|+1) X]; the upper end can
        overflow a double, in which case it is +inf."""
        lo = self.big_x / 2.0
        log_hi = (len(self.resonant_set) + 1) * math.log(6.0 * self.big_l) + math.log(
            self.big_x
        )
        hi = math.inf if log_hi > 709.0 else math.exp(log_hi)
        return lo, hi


def resonance_sum(inst: ResonanceInstance, t: float) -> float:
    """S(t) = sum_n f(n) cos(2 pi lambda_n t + phase)."""
    f = np.asarray(inst.coeffs)
    lam = np.asarray(inst.freqs)
    return math.fsum(f * np.cos(2.0 * math.pi * lam * t + inst.phase))


def resonance_bound(inst: ResonanceInstance) -> float:
    """(1/8) sum_{m in M} f(m) - (1/(L-1)) sum_{lambda_n <= 2 lambda_Y} f(n)
    - (4/(pi^2 X lambda_Y)) sum_n f(n)."""
    lam_y = inst.lambda_y
    if lam_y <= 0:
        raise DomainError("lambda_Y must be positive")
    resonant = math.fsum(inst.coeffs[m - 1] for m in inst.resonant_set)
    low_freq = math.fsum(
        c for c, lam in zip(inst.coeffs, inst.freqs) if lam <= 2.0 * lam_y
    )
    total = math.fsum(inst.coeffs)
    return (
        resonant / 8.0
        - low_freq / (inst.big_l - 1.0)
        - 4.0 * total / (math.pi**2 * inst.big_x * lam_y)
    )


def resonance_verify(
    inst: ResonanceInstance,
    grid_density: int = 20,
    budget: int = 10**7,
) -> tuple[float, float]:
    """Exhaustive grid search for x in the lemma interval with
    |S(x)| >= bound; returns (x, S(x)) at the first qualifying point.

    grid_density is the number of grid points per period of the highest
    frequency; budget caps the total number of grid points.
    """
    if grid_density < 1:
        raise DomainError("grid_density must be >= 1")
    bound = resonance_bound(inst)
    lo, hi = inst.interval()
    lam_max = max(inst.freqs)
    if lam_max <= 0:
        raise DomainError("needs at least one positive frequency")
    step = 1.0 / (lam_max * grid_density)
    f = np.asarray(inst.coeffs)
    lam = np.asarray(inst.freqs)
    best = -math.inf
    best_x = lo
    n_done = 0
    chunk = max(1024, (1 << 22) // len(inst.freqs))
    while n_done < budget:
        n_pts = min(chunk, budget - n_done)
        xs = lo + (n_done + np.arange(n_pts, dtype=np.float64)) * step
        in_range = xs <= hi
        if not in_range.all():
            xs = xs[in_range]
        if len(xs) == 0:
            raise VerificationFailure(best, best_x, bound, budget_exhausted=False)
        s_vals = np.cos(2.0 * math.pi * np.outer(xs, lam) + inst.phase) @ f
        hits = np.nonzero(np.abs(s_vals) >= bound)[0]
        if len(hits) > 0:
            i = int(hits[0])
            return float(xs[i]), float(s_vals[i])
        i = int(np.argmax(np.abs(s_vals)))
        if abs(s_vals[i]) > best:
            best = abs(float(s_vals[i]))
            best_x = float(xs[i])
        n_done += n_pts
    raise VerificationFailure(best, best_x, bound, budget_exhausted=True)


def divisor_instance(
    table: SigmaTable,
    n_terms: int,
    t_window: float,
    big_l: int,
    big_x: float,
    y_index: int | None = None,
) -> ResonanceInstance:
    """The divisor-sum instantiation: f(n) = sigma_a(n) n^(-3/4-a/2) for
    n <= N, lambda_n = 2 sqrt(n), phase -pi/4, resonant set the index
    interval [T/4, 3T/4].

    With these choices S(x) equals the truncated series evaluated at x^2.
    """
    if n_terms > table.n_max:
        raise DomainError(f"n_terms {n_terms} exceeds table n_max {table.n_max}")
    a = table.alpha.value
    n = np.arange(1, n_terms + 1, dtype=np.float64)
    coeffs = tuple(float(v) for v in table.values[1 : n_terms + 1] * n ** (-0.75 - 0.5 * a))
    freqs = tuple(float(v) for v in 2.0 * np.sqrt(n))
    m_lo = max(1, math.ceil(t_window / 4.0))
    m_hi = min(n_terms, math.floor(3.0 * t_window / 4.0))
    resonant = frozenset(range(m_lo, m_hi + 1))
    if not resonant:
        raise DomainError(f"empty resonant window for T = {t_window}")
    if y_index is None:
        # smallest index whose frequency band covers the resonant set
        lam_lo = freqs[m_lo - 1]
        lam_hi = freqs[m_hi - 1]
        y_index = next(
            (
                i + 1
                for i, lam in enumerate(freqs)
                if lam <= 2.0 * lam_lo and 1.5 * lam >= lam_hi
            ),
            None,
        )
        if y_index is None:
            raise DomainError(
                f"no admissible Y for resonant window [{m_lo}, {m_hi}]"
            )
    return ResonanceInstance(
        coeffs=coeffs,
        freqs=freqs,
        phase=-0.25 * math.pi,
        resonant_set=resonant,
        big_l=big_l,
        y_index=y_index,
        big_x=big_x,
    )


@dataclass(frozen=True)
class RecordEntry:
    x: float
    e_value: float
    normalized: float  # |E| / (x ln x)^(1/4 + a/2)


@dataclass
class RecordList:
    """Successive maxima of |normalized E| over half-integer x."""

    entries: list[RecordEntry] = field(default_factory=list)

    def final(self) -> RecordEntry:
        return self.entries[-1]


def record_scan(alpha: Alpha, x_max: float, table: SigmaTable) -> RecordList:
    """Scan x = 1.5, 2.5, ... <= x_max, recording strict maxima of the
    normalized error term magnitude."""
    x, e_value, normalized = half_integer_error_scan(alpha, x_max, table)
    mag = np.abs(normalized)
    run = np.maximum.accumulate(mag)
    is_rec = np.empty(len(mag), dtype=bool)
    is_rec[0] = True
    is_rec[1:] = mag[1:] > run[:-1]
    entries = [
        RecordEntry(x=float(x[i]), e_value=float(e_value[i]),
                    normalized=float(mag[i]))
        for i in np.nonzero(is_rec)[0]
    ]
    return RecordList(entries=entries)
