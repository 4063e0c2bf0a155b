# -*- coding: utf-8 -*-

import pytest
from hypothesis import given, settings, strategies as st

from multivalent.admissibility import PsiSpec, ScanGrid, scan_lemma1, scan_lemma2
from multivalent.errors import InvalidDelta, InvalidParameter
from multivalent.operators import OperatorParams, capacity_C

params_strategy = st.builds(
    OperatorParams,
    p=st.integers(min_value=1, max_value=4),
    n=st.integers(min_value=1, max_value=3),
    lam=st.floats(min_value=0, max_value=1),
    mu=st.floats(min_value=-2, max_value=2),
    eta=st.floats(min_value=-2, max_value=2))


@given(params_strategy, st.floats(min_value=0.1, max_value=10))
@settings(max_examples=50, deadline=None)
def test_first_scan_attains_its_bound_at_theta_zero(params, excess):
    C = capacity_C(params)
    spec = PsiSpec('thm1', params, M=C * (1 + excess))
    result = scan_lemma1(spec)
    assert result.certified
    theta, K = result.argmin
    assert theta == 0
    assert abs(K - params.n * spec.M) <= 1e-10 * spec.M
    assert abs(result.value - spec.bound) <= 1e-10 * max(1.0, abs(spec.bound))


def test_first_scan_at_M_equal_C_excludes_theta_pi():
    params = OperatorParams(p=2, lam=0.5, mu=1, eta=1)
    result = scan_lemma1(PsiSpec('thm1', params, M=capacity_C(params)))
    assert result.excluded == len(ScanGrid().K_multipliers)
    assert result.certified


@given(st.builds(OperatorParams,
                 p=st.integers(min_value=1, max_value=4), n=st.just(1),
                 lam=st.floats(min_value=0, max_value=1),
                 mu=st.floats(min_value=-2, max_value=2),
                 eta=st.floats(min_value=-2, max_value=2)),
       st.floats(min_value=0.05, max_value=0.95))
@settings(max_examples=50, deadline=None)
def test_second_scan_stays_below_k(params, fraction):
    delta = fraction * capacity_C(params)
    spec = PsiSpec('thm2', params, delta=delta)
    result = scan_lemma2(spec)
    assert result.certified
    assert result.value <= spec.bound + 1e-12 * max(1.0, abs(spec.bound))
    assert abs(result.value - spec.bound) < 1e-6 * max(1.0, abs(spec.bound))


def test_second_scan_with_delta_zero_excludes_the_origin():
    result = scan_lemma2(PsiSpec('thm2', OperatorParams(mu=1, eta=1), delta=0.0))
    assert result.excluded == len(ScanGrid().y_multipliers)
    assert result.certified


def test_scan_rows():
    params = OperatorParams(p=1, mu=1, eta=1)
    result = scan_lemma1(PsiSpec('thm1', params, M=2.0), ScanGrid(theta_count=64))
    assert result.columns == ('theta', 'K', 'value', 'margin')
    assert len(result.rows) == 64 * 3
    assert min(row[3] for row in result.rows) == result.margin


def test_invalid_specs():
    params = OperatorParams(p=1, mu=1, eta=1)
    with pytest.raises(InvalidParameter):
        PsiSpec('thm1', params, M=0.5)
    with pytest.raises(InvalidDelta):
        PsiSpec('thm2', params, delta=1.0)
    with pytest.raises(InvalidParameter):
        PsiSpec('thm3', params)
    with pytest.raises(InvalidParameter):
        ScanGrid(theta_count=32)
    with pytest.raises(InvalidParameter):
        scan_lemma2(PsiSpec('thm1', params, M=2.0))
