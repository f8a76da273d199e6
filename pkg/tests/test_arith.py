"""Divisor-sum arithmetic: direct enumeration vs the sieve, structural
properties of sigma_alpha, primorials, and supremum records."""

import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from sigmalab import (
    Alpha,
    PrimorialCutoff,
    build_sigma_table,
    prime_power_sum,
    primorial_cutoff,
    running_sup,
    sigma_alpha_direct,
    sup_sigma_rhs,
)
from sigmalab.arith import primes_up_to
from sigmalab.errors import DomainError


class TestAlpha:
    @pytest.mark.parametrize("bad", [0.0, 1.0, -0.25, 1.5])
    def test_open_interval(self, bad):
        with pytest.raises(DomainError):
            Alpha(bad)

    def test_require_half(self):
        Alpha(0.25).require_half()
        with pytest.raises(DomainError):
            Alpha(0.75).require_half()


class TestSigmaDirect:
    def test_small_hand_values(self):
        a = Alpha(0.5)
        assert sigma_alpha_direct(1, a) == 1.0
        # sigma_{1/2}(12) = 1 + sqrt(2) + sqrt(3) + 2 + sqrt(6) + sqrt(12)
        want = 1 + math.sqrt(2) + math.sqrt(3) + 2 + math.sqrt(6) + math.sqrt(12)
        assert abs(sigma_alpha_direct(12, a) - want) < 1e-12

    def test_against_sympy_divisors(self):
        a = Alpha(0.3)
        for n in (1, 2, 17, 60, 720, 5040, 123456):
            want = math.fsum(float(d) ** 0.3 for d in sympy.divisors(n))
            assert abs(sigma_alpha_direct(n, a) - want) < 1e-10 * want

    @given(
        m=st.integers(min_value=1, max_value=500),
        n=st.integers(min_value=1, max_value=500),
    )
    @settings(max_examples=60, deadline=None)
    def test_multiplicative_on_coprimes(self, m, n):
        if math.gcd(m, n) != 1:
            return
        a = Alpha(0.25)
        lhs = sigma_alpha_direct(m * n, a)
        rhs = sigma_alpha_direct(m, a) * sigma_alpha_direct(n, a)
        assert abs(lhs - rhs) < 1e-10 * max(1.0, abs(rhs))

    @given(n=st.integers(min_value=1, max_value=10000))
    @settings(max_examples=60, deadline=None)
    def test_reflection_identity(self, n):
        # sigma_a(n) = n^a * sigma_{-a}(n); with alpha restricted to (0,1)
        # compute the right side by direct enumeration of n^a (n/d)^{-a}
        a = 0.25
        rhs = n**a * math.fsum(
            float(d) ** (-a) for d in sympy.divisors(n)
        )
        assert abs(sigma_alpha_direct(n, Alpha(a)) - rhs) < 1e-10 * rhs

    def test_domain(self):
        with pytest.raises(DomainError):
            sigma_alpha_direct(0, Alpha(0.25))


class TestSigmaTable:
    def test_sieve_matches_direct(self, table_small, alpha_q):
        for n in (1, 2, 3, 100, 1024, 4999, 5000):
            want = sigma_alpha_direct(n, alpha_q)
            assert abs(table_small.value(n) - want) < 1e-10 * want

    def test_prefix_is_cumulative(self, table_small):
        vals = table_small.values
        assert abs(table_small.prefix_at(100) - math.fsum(vals[1:101])) < 1e-9
        assert table_small.prefix_at(0) == 0.0

    def test_range_errors(self, table_small):
        with pytest.raises(DomainError):
            table_small.value(5001)
        with pytest.raises(DomainError):
            build_sigma_table(0, Alpha(0.25))

    def test_monotone_prefix(self, table_small):
        assert np.all(np.diff(table_small.prefix) > 0.0)


class TestPrimes:
    def test_primes_up_to(self):
        assert list(primes_up_to(30)) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]

    def test_primorial_cutoff(self):
        assert primorial_cutoff(2.0) == PrimorialCutoff(2, 2)
        assert primorial_cutoff(6.0) == PrimorialCutoff(3, 6)
        assert primorial_cutoff(29.0) == PrimorialCutoff(3, 6)
        assert primorial_cutoff(30.0) == PrimorialCutoff(5, 30)
        assert primorial_cutoff(1e6) == PrimorialCutoff(17, 510510)
        with pytest.raises(DomainError):
            primorial_cutoff(1.5)

    def test_prime_power_sum(self):
        want = 2.0**-0.5 + 3.0**-0.5 + 5.0**-0.5 + 7.0**-0.5
        assert abs(prime_power_sum(10, 0.5) - want) < 1e-14


class TestSupRecords:
    def test_records_strictly_increase(self, table_small):
        recs = running_sup(table_small)
        vals = [r.value for r in recs]
        assert vals == sorted(vals)
        assert len(set(vals)) == len(vals)
        assert recs[0].n == 1

    def test_records_match_naive(self, alpha_q):
        table = build_sigma_table(300, alpha_q)
        recs = running_sup(table)
        best = -math.inf
        naive = []
        for n in range(1, 301):
            v = sigma_alpha_direct(n, alpha_q)
            if v > best:
                naive.append(n)
                best = v
        assert [r.n for r in recs] == naive

    def test_sup_rhs_domain(self):
        with pytest.raises(DomainError):
            sup_sigma_rhs(10.0, Alpha(0.25))
        assert sup_sigma_rhs(1e6, Alpha(0.25)) > 1e6**0.25
