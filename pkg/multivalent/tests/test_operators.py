# -*- coding: utf-8 -*-

import cmath

import numpy
import pytest
from hypothesis import given, settings, strategies as st

from multivalent.errors import (BranchAmbiguity, InvalidDelta, InvalidParameter,
                                NearZeroDenominator)
from multivalent.functions import ExponentialMonomial, MonomialPlusTerm, monomial
from multivalent.operators import (J_on_grid, OperatorParams, P_on_grid, P_series,
                                   capacity_C, check_identity_21, check_identity_22,
                                   eval_F, eval_h_thm1, eval_h_thm2, eval_J, eval_P,
                                   h_series_thm1, h_series_thm2, identity_residuals,
                                   principal_P, radial_logs)
from multivalent.sampling import SamplingPlan
from multivalent.series import order_of_vanishing

SMALL_PLAN = SamplingPlan(radii=(0.3, 0.6, 0.9), angles_per_ring=32)

params_strategy = st.builds(
    OperatorParams,
    p=st.integers(min_value=1, max_value=5),
    n=st.integers(min_value=1, max_value=3),
    lam=st.floats(min_value=0, max_value=1),
    mu=st.floats(min_value=-3, max_value=3),
    eta=st.floats(min_value=-3, max_value=3))

disk_points = st.builds(lambda r, t: r * cmath.exp(1j * t),
                        st.floats(min_value=0, max_value=0.99),
                        st.floats(min_value=0, max_value=6.283))

_rng = numpy.random.default_rng(0)
SCATTERED = (_rng.uniform(0, 0.99, 1000)
             * numpy.exp(2j * numpy.pi * _rng.uniform(0, 1, 1000)))


def test_params_validation():
    with pytest.raises(InvalidParameter) as e:
        OperatorParams(lam=1.5)
    assert 'lambda must lie in [0,1]' in str(e.value)
    with pytest.raises(InvalidParameter):
        OperatorParams(p=0)
    assert OperatorParams(p=2).replace(lam=0.5) == OperatorParams(p=2, lam=0.5)


def test_capacity():
    assert capacity_C(OperatorParams(p=2, lam=0.5, mu=1, eta=1)) == 4.5
    assert capacity_C(OperatorParams(p=3, lam=0, mu=2, eta=0)) == 1


@given(params_strategy, disk_points)
@settings(max_examples=50, deadline=None)
def test_monomial_collapse(params, z):
    f = monomial(params.p)
    C = capacity_C(params)
    assert abs(eval_J(f, params, z) - params.weight) < 1e-12
    assert abs(eval_P(f, params, z) - C) < 1e-12 * max(1.0, C)


@given(params_strategy)
@settings(max_examples=50, deadline=None)
def test_monomial_collapse_on_scattered_points(params):
    f = monomial(params.p)
    C = capacity_C(params)
    J = J_on_grid(f, params, SCATTERED)
    P, crossed = P_on_grid(f, params, SCATTERED)
    assert not numpy.ma.count_masked(J) and not numpy.ma.count_masked(P)
    assert not crossed.any()
    assert numpy.abs(J.data - params.weight).max() < 1e-12
    assert numpy.abs(P.data - C).max() < 1e-12 * max(1.0, C)


def test_P_tends_to_C_at_the_origin():
    f = MonomialPlusTerm(2, 1, 0.3)
    params = OperatorParams(p=2, lam=0.5, mu=1, eta=2)
    C = capacity_C(params)
    gaps = [abs(eval_P(f, params, cmath.rect(r, 0.7)) - C) for r in (1e-2, 1e-3, 1e-4)]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 1e-2


@pytest.mark.parametrize('f', [MonomialPlusTerm(2, 1, 0.3 + 0.1j), ExponentialMonomial(1, 0.4)])
@pytest.mark.parametrize('z', [0.35 + 0.2j, -0.6j, 0.8])
def test_F_is_affine_in_lambda(f, z):
    d = f.derivatives(z, 3)
    jets = dict((lam, eval_F(f, OperatorParams(p=f.p, lam=lam), z)) for lam in (0, 0.3, 1))
    # lambda = 0 gives the jet of f, lambda = 1 the jet of z f'
    for got, want in zip(jets[0], d[:3]):
        assert abs(got - want) < 1e-13
    for got, want in zip(jets[1], (z * d[1], d[1] + z * d[2], 2 * d[2] + z * d[3])):
        assert abs(got - want) < 1e-13
    for got, a, b in zip(jets[0.3], jets[0], jets[1]):
        assert abs(got - (0.7 * a + 0.3 * b)) < 1e-13


def test_monomial_collapse_on_grid():
    params = OperatorParams(p=3, n=2, lam=0.25, mu=-1.5, eta=2)
    f = monomial(3)
    J = J_on_grid(f, params, SMALL_PLAN.points)
    P, crossed = P_on_grid(f, params, SMALL_PLAN.points)
    assert not numpy.ma.count_masked(J) and not crossed.any()
    assert numpy.allclose(J, params.weight, atol=1e-12)
    assert numpy.allclose(P, capacity_C(params), rtol=1e-12)


def test_F_of_monomial():
    params = OperatorParams(p=2, lam=0.5)
    F, F1, F2 = eval_F(monomial(2), params, 0.5)
    # F = (1 + lam) z^2
    assert abs(F - 1.5 * 0.25) < 1e-15
    assert abs(F1 - 1.5) < 1e-15
    assert abs(F2 - 3) < 1e-15


def test_J_is_starlikeness_at_lambda_zero():
    f = MonomialPlusTerm(1, 1, 0.2)
    params = OperatorParams(p=1, lam=0, mu=1, eta=0)
    z = 0.4 + 0.3j
    assert abs(eval_J(f, params, z) - z * (1 + 0.4 * z) / (z + 0.2 * z * z)) < 1e-14


def test_J_at_origin():
    params = OperatorParams(p=2, mu=1, eta=2)
    assert eval_J(MonomialPlusTerm(2, 1, 0.3), params, 0) == params.weight
    assert eval_P(MonomialPlusTerm(2, 1, 0.3), params, 0) == capacity_C(params)


def test_zero_of_F_is_masked_and_raised():
    f = MonomialPlusTerm(1, 1, -2.0)   # F = z(1 - 2z) vanishes at 1/2
    params = OperatorParams(mu=1, eta=1)
    plan = SamplingPlan(radii=(0.5, 0.9), angles_per_ring=16)
    J = J_on_grid(f, params, plan.points)
    assert J.mask[0, 0]
    assert numpy.ma.count_masked(J) == 1
    with pytest.raises(NearZeroDenominator) as e:
        eval_J(f, params, 0.5)
    assert e.value.factor == 'F'


def test_branch_through_a_zero_is_ambiguous():
    f = MonomialPlusTerm(1, 1, -2.0)
    with pytest.raises(BranchAmbiguity):
        eval_P(f, OperatorParams(mu=0.5, eta=0), 0.9)
    logs = radial_logs(f, OperatorParams(mu=0.5, eta=0), numpy.array([0.9, 0.2]))
    assert list(logs.bad) == [True, False]


def test_continued_branch_leaves_principal_one():
    # F/z = exp(3z) winds past the negative axis where Im(3z) > pi
    f = ExponentialMonomial(1, 3.6j)
    params = OperatorParams(mu=1, eta=0)
    with pytest.raises(BranchAmbiguity):
        eval_P(f, params, 0.95)
    value = eval_P(f, params, 0.95, strict=False)
    assert abs(value - cmath.exp(3.6j * 0.95)) < 1e-12
    P, crossed = P_on_grid(f, params, numpy.array([0.95, 0.5]))
    assert list(crossed) == [True, False]


def test_principal_route_agrees_without_crossings():
    f = MonomialPlusTerm(2, 1, 0.2 + 0.1j)
    params = OperatorParams(p=2, lam=0.5, mu=0.7, eta=-1.3)
    P, crossed = P_on_grid(f, params, SMALL_PLAN.points)
    assert not crossed.any()
    assert numpy.allclose(P, principal_P(f, params, SMALL_PLAN.points), rtol=1e-12)


@pytest.mark.parametrize('f, params', [
    (MonomialPlusTerm(1, 1, 0.1), OperatorParams(mu=1, eta=1)),
    (MonomialPlusTerm(2, 2, 0.05 + 0.05j), OperatorParams(p=2, n=2, lam=0.5, mu=-1, eta=1)),
    (ExponentialMonomial(1, 0.2), OperatorParams(lam=1, mu=0.5, eta=0.5)),
])
def test_series_route_agrees_with_pointwise_route(f, params):
    series = P_series(f, params)
    z = SMALL_PLAN.points
    P, _ = P_on_grid(f, params, z)
    assert numpy.allclose(series(z), P, rtol=0, atol=1e-9 * capacity_C(params))


def test_h_functions_vanish_to_the_right_order():
    f = MonomialPlusTerm(2, 3, 0.1)
    params = OperatorParams(p=2, n=3, lam=0.5, mu=1, eta=1)
    # h(0) = 0 for the first theorem, h(0) = 1 for the second, both H[., n]
    assert order_of_vanishing(h_series_thm1(f, params)) == 3
    assert order_of_vanishing(h_series_thm2(f, params, 1.0), 1) == 3
    z = 0.4j
    assert abs(eval_h_thm1(f, params, z) - h_series_thm1(f, params)(z)) < 1e-12
    assert abs(eval_h_thm2(f, params, 1.0, z) - h_series_thm2(f, params, 1.0)(z)) < 1e-12


def test_delta_must_lie_below_capacity():
    params = OperatorParams(mu=1, eta=1)
    with pytest.raises(InvalidDelta):
        eval_h_thm2(monomial(1), params, 1.0, 0.5)
    with pytest.raises(InvalidDelta):
        check_identity_22(monomial(1), params, -0.1, 0.5)


@pytest.mark.parametrize('method', ['contour', 'series'])
def test_identities(method):
    f = MonomialPlusTerm(2, 1, 0.1 - 0.05j)
    params = OperatorParams(p=2, lam=0.5, mu=1, eta=-0.5)
    C = capacity_C(params)
    for z in (0.3, 0.5j, -0.6 + 0.2j):
        assert check_identity_21(f, params, z, method=method) < 1e-8
        assert check_identity_22(f, params, C / 3, z, method=method) < 1e-8


def test_identity_residuals_on_grid():
    f = ExponentialMonomial(1, 0.2 + 0.1j)
    params = OperatorParams(lam=0.5, mu=1, eta=1)
    residual = identity_residuals(f, params, SMALL_PLAN.points, '22', delta=0.5)
    assert not numpy.ma.count_masked(residual)
    assert residual.max() < 1e-8
    with pytest.raises(InvalidParameter):
        identity_residuals(f, params, SMALL_PLAN.points, '23')
