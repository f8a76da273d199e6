"""Truncated oscillating series approximating E_alpha, the admissible-N
window, the functional-equation factor gamma(s), the Stirling phase
theta(t), and the Bessel-form kernel W_alpha with its contour-integral
oracle."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .arith import Alpha, SigmaTable
from .errors import AccuracyError, DomainError, TableRangeError
from .special import bessel_i, bessel_j, bessel_k_large, log_gamma

__all__ = [
    "SeriesParams",
    "KernelQuadrature",
    "truncated_series",
    "series_approx",
    "admissible_range",
    "gamma_factor",
    "theta_phase",
    "kernel_bessel",
    "kernel_contour",
]

_LOG_PI = math.log(math.pi)


@dataclass(frozen=True)
class SeriesParams:
    x: float
    n_terms: int
    alpha: Alpha

    def __post_init__(self):
        if self.x <= 1:
            raise DomainError(f"series requires x > 1, got {self.x}")
        if self.n_terms < 0:
            raise DomainError(f"n_terms must be >= 0, got {self.n_terms}")


@dataclass(frozen=True)
class KernelQuadrature:
    """Contour parameters for the W_alpha oracle.

    abscissa is the real part of the vertical segment; height is the
    height T at which the contour bends into the decaying 45-degree
    wings; step is the trapezoid spacing along the path parameter.
    """

    abscissa: float = 2.0
    height: float = 200.0
    step: float = 0.05

    def __post_init__(self):
        if self.height <= 0 or self.step <= 0:
            raise DomainError("height and step must be positive")
        if self.step > self.height / 100.0:
            raise DomainError(
                f"step {self.step} too coarse for height {self.height}"
            )


def truncated_series(params: SeriesParams, table: SigmaTable) -> float:
    """F_alpha(x, N) = sum_{n<=N} sigma_a(n) n^(-3/4-a/2) cos(4 pi sqrt(nx) - pi/4)."""
    n = params.n_terms
    if n > table.n_max:
        raise TableRangeError(float(n), table.n_max)
    if n == 0:
        return 0.0
    a = params.alpha.value
    idx = np.arange(1, n + 1, dtype=np.float64)
    weights = table.values[1 : n + 1] * idx ** (-0.75 - 0.5 * a)
    return kernels.oscillating_cosine_sum(
        np.ascontiguousarray(weights), params.x
    )


def series_approx(params: SeriesParams, table: SigmaTable) -> float:
    """x^(1/4+a/2)/(sqrt(2) pi) * F_alpha(x, N): the series approximation of E_alpha."""
    a = params.alpha.value
    prefactor = params.x ** (0.25 + 0.5 * a) / (math.sqrt(2.0) * math.pi)
    return prefactor * truncated_series(params, table)


def admissible_range(x: float, alpha: Alpha, eps: float) -> tuple[float, float]:
    """(x^(1/2+a+eps), x^(1/(2a)-eps)): the admissible N window."""
    if x <= 1:
        raise DomainError(f"admissible_range requires x > 1, got {x}")
    if eps <= 0:
        raise DomainError(f"eps must be positive, got {eps}")
    a = alpha.require_half().value
    gap = 1.0 / (2.0 * a) - 0.5 - a
    if eps >= min(gap, 1.0) / 2.0:
        raise DomainError(
            f"eps={eps} leaves an empty window: exponent gap is {gap:.6g}, "
            f"need eps < {min(gap, 1.0) / 2.0:.6g}"
        )
    lo = x ** (0.5 + a + eps)
    hi = x ** (1.0 / (2.0 * a) - eps)
    return lo, hi


def _gamma_pole_distance(s: complex, alpha: float) -> float:
    # poles of the numerator Gammas: s = -2k and s = alpha - 2k, k >= 0
    best = math.inf
    for base in (0.0, alpha):
        k = round((base - s.real) / 2.0)
        for kk in (k - 1, k, k + 1):
            if kk >= 0:
                best = min(best, abs(s - (base - 2.0 * kk)))
    return best


def gamma_factor(s: complex, alpha: Alpha) -> complex:
    """gamma(s) = pi^(1+a-2s) G(s/2)G((s-a)/2) / (G((1-s)/2)G((1+a-s)/2))."""
    s = complex(s)
    a = alpha.value
    if _gamma_pole_distance(s, a) < 1e-8:
        raise DomainError(f"gamma_factor pole too close at s = {s}")
    log_val = (
        (1.0 + a - 2.0 * s) * _LOG_PI
        + log_gamma(s / 2.0)
        + log_gamma((s - a) / 2.0)
        - log_gamma((1.0 - s) / 2.0)
        - log_gamma((1.0 + a - s) / 2.0)
    )
    return cmath.exp(log_val)


def theta_phase(t: float) -> float:
    """theta(t) = t/(2pi) ln(t/(2pi)) - t/(2pi) - 1/8."""
    if t <= 0:
        raise DomainError(f"theta_phase requires t > 0, got {t}")
    u = t / (2.0 * math.pi)
    return u * math.log(u) - u - 0.125


def kernel_bessel(y: float, alpha: Alpha) -> float:
    """Closed Bessel form of the kernel W_alpha.

    W_a(y) = (I_{-1-a} - I_{1+a} - J_{-a-1} - J_{a+1})(4 sqrt(y))
             / (2 sin(pi a / 2) y^((1+a)/2)).

    For large argument the I difference is evaluated through the
    identity I_{-v} - I_v = (2/pi) sin(v pi) K_v, which avoids the
    catastrophic cancellation of two e^z-sized terms.
    """
    if y <= 0:
        raise DomainError(f"kernel_bessel requires y > 0, got {y}")
    a = alpha.require_half().value
    z = 4.0 * math.sqrt(y)
    if z <= 12.0:
        i_part = bessel_i(-1.0 - a, z) - bessel_i(1.0 + a, z)
    else:
        i_part = -(2.0 / math.pi) * math.sin(math.pi * a) * bessel_k_large(
            1.0 + a, z
        )
    j_part = bessel_j(-a - 1.0, z) + bessel_j(a + 1.0, z)
    prefactor = 1.0 / (2.0 * math.sin(0.5 * math.pi * a) * y ** (0.5 * (1.0 + a)))
    return prefactor * (i_part - j_part)


def _smooth_step(u: float) -> tuple[float, float]:
    # C-infinity ramp S(u) and its derivative: 0 for u <= 0, 1 for u >= 1.
    if u <= 0.0:
        return 0.0, 0.0
    if u >= 1.0:
        return 1.0, 0.0
    left = math.exp(-1.0 / u)
    right = math.exp(-1.0 / (1.0 - u))
    total = left + right
    s = left / total
    ds = left * right * (1.0 / (u * u) + 1.0 / ((1.0 - u) * (1.0 - u))) / (
        total * total
    )
    return s, ds


_RAMP_WIDTH = 12.0


def _contour_path(bend: float, length: float, h: float):
    """Yield (t, dt/dtau) along the deformed contour at spacing h.

    The path is real up to `bend`, then turns into a 45-degree ray via
    psi(tau) = (tau - bend) * S((tau - bend)/w) with a C-infinity step S.
    The path is independent of h and smooth, so the trapezoid rule
    converges superalgebraically on the decaying integrand.
    """
    n_steps = int(math.ceil(length / h))
    for j in range(n_steps + 1):
        tau = j * h
        if tau <= bend:
            yield complex(tau, 0.0), complex(1.0, 0.0)
        else:
            u = (tau - bend) / _RAMP_WIDTH
            s, ds = _smooth_step(u)
            psi = (tau - bend) * s
            slope = s + u * ds
            yield complex(tau, psi), complex(1.0, slope)


def _kernel_integrand(t: complex, y: float, a: float, abscissa: float) -> complex:
    s = complex(abscissa, 0.0) + 1j * t
    log_val = (
        -s * math.log(y)
        + log_gamma(s / 2.0)
        + log_gamma((s - a) / 2.0)
        - log_gamma((1.0 - s) / 2.0)
        - log_gamma((1.0 + a - s) / 2.0)
    )
    return cmath.exp(log_val) / (a + 1.0 - s)


def _contour_value(y: float, a: float, quad: KernelQuadrature) -> float:
    t_star = 2.0 * math.sqrt(y)
    if quad.height < 2.0 * t_star + 10.0:
        raise DomainError(
            f"contour height {quad.height} too small: the stationary point "
            f"sits at t = {t_star:.3g}, need height >= {2.0 * t_star + 10.0:.3g}"
        )
    if quad.abscissa <= 1.0 + a:
        raise DomainError(
            f"abscissa must exceed 1 + alpha = {1.0 + a}, got {quad.abscissa}"
        )
    bend = quad.height
    # decay rate on the asymptotic ray is ~ sqrt(2) ln(t / t_star) per unit
    rate = math.sqrt(2.0) * math.log(max(bend / t_star, 1.5))
    length = bend + _RAMP_WIDTH + 60.0 / rate
    h = quad.step
    total = 0.0 + 0.0j
    first = None
    for t, dt in _contour_path(bend, length, h):
        g = _kernel_integrand(t, y, a, quad.abscissa) * dt
        if first is None:
            first = g
            total += 0.5 * g  # tau = 0 node enters once in the full sum
        else:
            total += g
    # full line = node at 0 + twice the real part of the upper half
    return (h / math.pi) * total.real


def kernel_contour(
    y: float,
    alpha: Alpha,
    quad: KernelQuadrature | None = None,
    verify: bool = False,
    tol: float = 1e-7,
) -> float:
    """W_alpha(y) by quadrature of the defining contour integral.

    The contour runs vertically at the given abscissa up to |Im s| =
    height, then bends smoothly into 45-degree rays along which the
    integrand decays exponentially; the raw vertical truncation does not
    converge (the integrand grows like t^(2-alpha)), so the bend is what
    realizes the principal-value limit. With verify=True the value is
    recomputed at half the step and twice the height and an
    AccuracyError carries both values if they disagree beyond tol.
    """
    if y <= 0:
        raise DomainError(f"kernel_contour requires y > 0, got {y}")
    a = alpha.require_half().value
    if quad is None:
        height = max(200.0, 4.0 * math.sqrt(y) + 50.0)
        quad = KernelQuadrature(height=height, step=min(0.05, height / 4000.0))
    value = _contour_value(y, a, quad)
    if verify:
        refined = _contour_value(
            y,
            a,
            KernelQuadrature(
                abscissa=quad.abscissa,
                height=2.0 * quad.height,
                step=0.5 * quad.step,
            ),
        )
        if abs(refined - value) > tol * max(1.0, abs(refined)):
            raise AccuracyError(
                "contour quadrature did not converge", value, refined
            )
    return value
