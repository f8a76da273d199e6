"""Self-contained special functions: Riemann zeta (real and complex),
complex Gamma, Bessel J and I of arbitrary real order, and the classical
convexity exponent mu(sigma) bounding |zeta(sigma+it)| growth.

Zeta uses Euler-Maclaurin with adaptive Bernoulli corrections; Gamma uses
the Stirling series with upward argument shifting (reflection below
re = 1/2); Bessel functions switch between the ascending series and the
large-argument asymptotic expansion at y = 12 + 2|nu|.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

from .errors import DomainError

__all__ = [
    "zeta_real",
    "zeta_complex",
    "gamma_complex",
    "log_gamma",
    "bessel_j",
    "bessel_i",
    "mu_exponent",
]


def _bernoulli_even(count: int) -> list[float]:
    # B_2, B_4, ..., B_{2*count}, exact rationals rounded once to float.
    n = 2 * count + 1
    b = [Fraction(0)] * n
    b[0] = Fraction(1)
    for m in range(1, n):
        acc = Fraction(0)
        c = 1  # C(m+1, j)
        for j in range(m):
            acc += c * b[j]
            c = c * (m + 1 - j) // (j + 1)
        b[m] = -acc / (m + 1)
    return [float(b[2 * k]) for k in range(1, count + 1)]


_B2K = _bernoulli_even(40)

# B_2k / (2k)!  for the Euler-Maclaurin tail of zeta.
_B2K_FACT = [_B2K[k - 1] / math.factorial(2 * k) for k in range(1, 41)]


def _zeta_em(s: complex) -> complex:
    if s == 1:
        raise DomainError("zeta has a pole at s = 1")
    # Small cutoffs keep the cancellation error down for Re s < 0; the
    # cutoff must still outgrow |Im s| for the correction tail to converge.
    t = abs(s.imag)
    n_cut = 12 if t < 3 else max(24, int(t) + 16)
    acc = 0.0 + 0.0j
    for n in range(1, n_cut):
        acc += cmath.exp(-s * math.log(n))
    ncs = cmath.exp(-s * math.log(n_cut))  # n_cut^-s
    total = acc + 0.5 * ncs + ncs * n_cut / (s - 1)
    # tail: sum_k B_2k/(2k)! * s(s+1)...(s+2k-2) * n_cut^(1-s-2k)
    poch = s
    power = ncs / n_cut  # n_cut^(1-s-2k), starting at k = 1
    inv_n2 = 1.0 / (float(n_cut) * n_cut)
    scale = abs(total) + 1.0
    prev = math.inf
    for k in range(1, 41):
        term = _B2K_FACT[k - 1] * poch * power
        mag = abs(term)
        if mag > prev:
            break
        total += term
        if mag < 1e-18 * scale:
            break
        prev = mag
        poch *= (s + 2 * k - 1) * (s + 2 * k)
        power *= inv_n2
    return total


def zeta_real(s: float) -> float:
    """Riemann zeta on the real line, s != 1."""
    if s == 1:
        raise DomainError("zeta has a pole at s = 1")
    if abs(s) > 100:
        raise DomainError(f"zeta_real restricted to |s| <= 100, got {s}")
    if s < -0.5:
        # reflection sidesteps the heavy cancellation Euler-Maclaurin
        # suffers at negative s (partial sums grow like n_cut^|s|)
        return (
            2.0**s
            * math.pi ** (s - 1.0)
            * math.sin(0.5 * math.pi * s)
            * math.exp(math.lgamma(1.0 - s))
            * _zeta_em(complex(1.0 - s)).real
        )
    return _zeta_em(complex(s)).real


def zeta_complex(s: complex) -> complex:
    """Riemann zeta at complex s via Euler-Maclaurin."""
    s = complex(s)
    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise DomainError("zeta_complex requires finite components")
    if s == 1:
        raise DomainError("zeta has a pole at s = 1")
    if abs(s.imag) > 1e4:
        raise DomainError("zeta_complex tested only for |Im s| <= 1e4")
    return _zeta_em(s)


_STIRLING_SHIFT = 26.0
_LOG_2PI_HALF = 0.5 * math.log(2.0 * math.pi)


def log_gamma(z: complex) -> complex:
    """A branch of log Gamma(z); exp(log_gamma(z)) == Gamma(z).

    The branch may differ from the principal one by 2*pi*i*k, which is
    irrelevant everywhere this library exponentiates sums of log-gammas.
    """
    z = complex(z)
    if z.imag == 0 and z.real <= 0 and z.real == int(z.real):
        raise DomainError(f"Gamma pole at z = {z.real}")
    shift = 0.0 + 0.0j
    w = z
    while abs(w.imag) < _STIRLING_SHIFT and w.real < _STIRLING_SHIFT:
        shift += cmath.log(w)
        w += 1
    out = (w - 0.5) * cmath.log(w) - w + _LOG_2PI_HALF
    zpow = w
    z2 = w * w
    for k in range(1, 16):
        term = _B2K[k - 1] / ((2 * k) * (2 * k - 1)) / zpow
        out += term
        if abs(term) < 1e-18 * abs(out):
            break
        zpow *= z2
    return out - shift


def gamma_complex(z: complex) -> complex:
    """Complex Gamma; reflection formula below re = 1/2."""
    z = complex(z)
    if z.imag == 0 and z.real <= 0 and z.real == int(z.real):
        raise DomainError(f"Gamma pole at z = {z.real}")
    if z.real < 0.5:
        s = cmath.sin(math.pi * z)
        if abs(s) < math.pi * 1e-8:  # distance to pole < 1e-8
            raise DomainError(f"Gamma evaluated too close to a pole: z = {z}")
        return math.pi / (s * gamma_complex(1 - z))
    return cmath.exp(log_gamma(z))


_LD = None  # numpy.longdouble, imported lazily


def _longdouble():
    global _LD
    if _LD is None:
        import numpy as np

        _LD = np.longdouble
    return _LD


def _bessel_series(nu: float, y: float, signed: bool) -> float:
    # Ascending series; extended precision soaks up the cancellation of
    # the alternating J series near the branch switchover.
    ld = _longdouble()
    half = ld(y) / 2
    q = half * half
    if signed:
        q = -q
    term = ld(math.pow(y / 2.0, nu)) / ld(math.gamma(nu + 1.0))
    total = term
    for k in range(1, 200):
        term = term * q / (ld(k) * ld(nu + k))
        total += term
        if abs(float(term)) <= 1e-20 * (abs(float(total)) + 1e-300):
            break
    return float(total)


def _hankel_pq(nu: float, y: float) -> tuple[float, float]:
    # Asymptotic P, Q sums (Hankel expansion), truncated at the smallest term.
    # P = 1 - a2 + a4 - ..., Q = a1 - a3 + ... with a_k the Hankel factors.
    mu = 4.0 * nu * nu
    p, q = 1.0, 0.0
    term = 1.0
    prev = math.inf
    for k in range(1, 40):
        term *= (mu - (2 * k - 1) ** 2) / (k * 8.0 * y)
        mag = abs(term)
        if mag > prev:
            break
        j, r = divmod(k, 2)
        s = -1.0 if j % 2 else 1.0
        if r:
            q += s * term
        else:
            p += s * term
        prev = mag
    return p, q


def _bessel_j_asym(nu: float, y: float) -> float:
    p, q = _hankel_pq(nu, y)
    chi = y - (0.5 * nu + 0.25) * math.pi
    return math.sqrt(2.0 / (math.pi * y)) * (p * math.cos(chi) - q * math.sin(chi))


def _bessel_i_asym(nu: float, y: float) -> float:
    mu = 4.0 * nu * nu
    total = 1.0
    term = 1.0
    prev = math.inf
    for k in range(1, 60):
        term *= -(mu - (2 * k - 1) ** 2) / (k * 8.0 * y)
        mag = abs(term)
        if mag > prev:
            break
        total += term
        prev = mag
    return math.exp(y) / math.sqrt(2.0 * math.pi * y) * total


def bessel_k_large(nu: float, y: float) -> float:
    """Modified Bessel K via its asymptotic expansion; requires y >= 10."""
    if y < 10:
        raise DomainError("bessel_k_large needs y >= 10")
    mu = 4.0 * nu * nu
    total = 1.0
    term = 1.0
    prev = math.inf
    for k in range(1, 60):
        term *= (mu - (2 * k - 1) ** 2) / (k * 8.0 * y)
        mag = abs(term)
        if mag > prev:
            break
        total += term
        prev = mag
    return math.sqrt(math.pi / (2.0 * y)) * math.exp(-y) * total


def _switchover(nu: float) -> float:
    return 12.0 + 2.0 * abs(nu)


def bessel_j(nu: float, y: float) -> float:
    """Bessel J_nu(y) for real order, y >= 0."""
    if y < 0:
        raise DomainError("bessel_j requires y >= 0")
    if abs(nu) > 5:
        raise DomainError("bessel_j tested only for |nu| <= 5")
    if nu < 0 and nu == int(nu):
        m = int(-nu)
        return (-1.0) ** m * bessel_j(float(m), y)
    if y == 0.0:
        if nu == 0:
            return 1.0
        if nu > 0:
            return 0.0
        raise DomainError("J_nu(0) diverges for negative non-integer nu")
    if y <= _switchover(nu):
        return _bessel_series(nu, y, signed=True)
    return _bessel_j_asym(nu, y)


def bessel_i(nu: float, y: float) -> float:
    """Modified Bessel I_nu(y) for real order, 0 <= y (overflows past ~700)."""
    if y < 0:
        raise DomainError("bessel_i requires y >= 0")
    if abs(nu) > 5:
        raise DomainError("bessel_i tested only for |nu| <= 5")
    if nu < 0 and nu == int(nu):
        return bessel_i(float(-nu), y)
    if y == 0.0:
        if nu == 0:
            return 1.0
        if nu > 0:
            return 0.0
        raise DomainError("I_nu(0) diverges for negative non-integer nu")
    if y > 700:
        raise DomainError("bessel_i overflows IEEE double for y > 700")
    if y <= _switchover(nu):
        return _bessel_series(nu, y, signed=False)
    return _bessel_i_asym(nu, y)


def mu_exponent(sigma: float) -> float:
    """Piecewise convexity exponent with |zeta(sigma+it)| << t^mu * ln t."""
    if sigma >= 1.0:
        return 0.0
    if sigma >= 0.5:
        return (1.0 - sigma) / 3.0
    return 0.5 - 2.0 * sigma / 3.0
