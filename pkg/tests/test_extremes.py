"""Resonance-lemma instances: hand-checked bounds, dense-grid oracle for
the search, instance validation, and record scans."""

import math

import pytest

from sigmalab import (
    Alpha,
    ResonanceInstance,
    build_sigma_table,
    error_term,
    record_scan,
    resonance_bound,
    resonance_sum,
    resonance_verify,
)
from sigmalab.errors import DomainError
from sigmalab.extremes import VerificationFailure, divisor_instance


def toy_instance(**overrides):
    kw = dict(
        coeffs=(1.0, 0.5, 0.25),
        freqs=(1.0, 1.25, 1.5),
        phase=0.0,
        resonant_set=frozenset({1, 2}),
        big_l=10,
        y_index=1,
        big_x=16.0,
    )
    kw.update(overrides)
    return ResonanceInstance(**kw)


class TestInstanceValidation:
    def test_valid(self):
        inst = toy_instance()
        assert inst.lambda_y == 1.0

    def test_rejects_bad_data(self):
        with pytest.raises(DomainError):
            toy_instance(coeffs=(1.0, -0.5, 0.25))
        with pytest.raises(DomainError):
            toy_instance(freqs=(1.5, 1.25, 1.0))
        with pytest.raises(DomainError):
            toy_instance(big_l=1)
        with pytest.raises(DomainError):
            toy_instance(y_index=4)
        with pytest.raises(DomainError):
            toy_instance(big_x=1.0)
        # resonant frequency outside [lambda_Y/2, 3 lambda_Y/2]
        with pytest.raises(DomainError):
            toy_instance(freqs=(1.0, 1.25, 2.0), resonant_set=frozenset({3}))

    def test_interval(self):
        lo, hi = toy_instance().interval()
        assert lo == 8.0
        assert abs(hi - (6 * 10) ** 3 * 16.0) < 1e-6 * hi

    def test_interval_overflow_is_inf(self):
        inst = toy_instance(
            coeffs=tuple([1.0] * 200),
            freqs=tuple(1.0 + 0.001 * i for i in range(200)),
            resonant_set=frozenset(range(1, 201)),
            y_index=100,
        )
        assert inst.interval()[1] == math.inf


class TestBoundAndSum:
    def test_bound_hand_computed(self):
        inst = toy_instance()
        # all three frequencies are <= 2 lambda_Y = 2
        want = (1.0 + 0.5) / 8.0 - 1.75 / 9.0 - 4.0 * 1.75 / (
            math.pi**2 * 16.0 * 1.0
        )
        assert abs(resonance_bound(inst) - want) < 1e-15

    def test_sum_hand_computed(self):
        inst = toy_instance()
        t = 0.3
        want = math.fsum(
            c * math.cos(2.0 * math.pi * lam * t)
            for c, lam in zip(inst.coeffs, inst.freqs)
        )
        assert abs(resonance_sum(inst, t) - want) < 1e-15

    def test_sum_at_zero_phase_peak(self):
        # at t = 0 every cosine is 1, so S(0) = sum of coefficients
        inst = toy_instance()
        assert abs(resonance_sum(inst, 0.0) - 1.75) < 1e-15


class TestVerify:
    def test_finds_point_and_agrees_with_dense_oracle(self):
        inst = toy_instance()
        x, s = resonance_verify(inst, grid_density=40)
        lo, hi = inst.interval()
        assert lo <= x <= hi
        assert abs(s) >= resonance_bound(inst)
        assert abs(resonance_sum(inst, x) - s) < 1e-12

    def test_positive_bound_success(self):
        # single resonant cosine: bound 1/8 - 1/(L-1) - 4/(pi^2 X) > 0,
        # and S(t) = cos(2 pi t) hits 1 on the grid
        inst = ResonanceInstance(
            coeffs=(1.0,),
            freqs=(1.0,),
            phase=0.0,
            resonant_set=frozenset({1}),
            big_l=100,
            y_index=1,
            big_x=100.0,
        )
        bound = resonance_bound(inst)
        assert bound > 0.1
        x, s = resonance_verify(inst, grid_density=20)
        assert abs(s) >= bound
        assert inst.interval()[0] <= x

    @staticmethod
    def _null_grid_instance(big_x):
        # phase pi/2 turns S into -sin(2 pi t); with grid density 2 every
        # sample point is a half integer, where that sine vanishes
        return ResonanceInstance(
            coeffs=(1.0,),
            freqs=(1.0,),
            phase=0.5 * math.pi,
            resonant_set=frozenset({1}),
            big_l=100,
            y_index=1,
            big_x=big_x,
        )

    def test_budget_exhaustion(self):
        inst = self._null_grid_instance(100.0)
        assert resonance_bound(inst) > 0.1
        with pytest.raises(VerificationFailure) as ei:
            resonance_verify(inst, grid_density=2, budget=10)
        assert ei.value.budget_exhausted
        assert ei.value.max_found < 1e-8

    def test_interval_exhaustion(self):
        inst = self._null_grid_instance(4.0)
        assert resonance_bound(inst) > 0.0
        # interval holds ~2.9e6 grid points at this density, well under
        # the budget, so the search must stop at the interval end
        with pytest.raises(VerificationFailure) as ei:
            resonance_verify(inst, grid_density=2, budget=10**7)
        assert not ei.value.budget_exhausted

    def test_grid_density_validation(self):
        with pytest.raises(DomainError):
            resonance_verify(toy_instance(), grid_density=0)


class TestDivisorInstance:
    def test_construction(self, table_small, alpha_q):
        inst = divisor_instance(
            table_small, n_terms=50, t_window=4.0, big_l=40, big_x=64.0
        )
        assert len(inst.coeffs) == 50
        assert inst.phase == -0.25 * math.pi
        assert inst.resonant_set == frozenset({1, 2, 3})
        assert inst.freqs[0] == 2.0  # lambda_1 = 2 sqrt(1)
        # f(1) = sigma_a(1) * 1 = 1
        assert inst.coeffs[0] == 1.0
        a = alpha_q.value
        want = table_small.value(7) * 7.0 ** (-0.75 - 0.5 * a)
        assert abs(inst.coeffs[6] - want) < 1e-15

    def test_resonant_window_matches_t(self, table_small):
        inst = divisor_instance(
            table_small, n_terms=50, t_window=12.0, big_l=40, big_x=64.0
        )
        assert inst.resonant_set == frozenset(range(3, 10))

    def test_rejects_oversized(self, table_small):
        with pytest.raises(DomainError):
            divisor_instance(
                table_small, n_terms=10**6, t_window=4.0, big_l=40, big_x=64.0
            )


class TestRecordScan:
    def test_records_monotone_and_match_naive(self, alpha_q):
        table = build_sigma_table(400, alpha_q)
        recs = record_scan(alpha_q, 400.0, table)
        vals = [r.normalized for r in recs.entries]
        assert vals == sorted(vals)
        # naive rescan over half integers
        best = -math.inf
        naive = []
        x = 1.5
        while x <= 400.0:
            v = abs(error_term(x, alpha_q, table).normalized)
            if v > best:
                naive.append(x)
                best = v
            x += 1.0
        assert [r.x for r in recs.entries] == naive
        assert recs.final().x == naive[-1]
