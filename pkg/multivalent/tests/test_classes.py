# -*- coding: utf-8 -*-

import pytest
from hypothesis import given, settings, strategies as st

from multivalent.classes import (Bazilevic, ClassPredicate, Convex, MClass, NClass,
                                 OperatorPredicate, PowerPredicate, Starlike, TLambda,
                                 make_class, membership, reduction_table)
from multivalent.errors import InvalidDelta, InvalidParameter
from multivalent.functions import GeneralSeries, MonomialPlusTerm, monomial
from multivalent.sampling import SamplingPlan
from multivalent.series import TruncatedSeries

PLAN = SamplingPlan(radii=(0.3, 0.6, 0.9), angles_per_ring=32)


def koebe():
    "z/(1-z)^2 to 64 terms; starlike of order 0, not convex"
    return GeneralSeries(TruncatedSeries(range(1, 64), 1, 64))


def test_predicate_selection():
    assert isinstance(ClassPredicate.create(Starlike()), OperatorPredicate)
    assert isinstance(ClassPredicate.create(MClass(gamma=0.5)), OperatorPredicate)
    assert isinstance(ClassPredicate.create(NClass(mu=1, eta=1)), PowerPredicate)
    assert isinstance(ClassPredicate.create(Bazilevic(eta=0.5)), PowerPredicate)


def test_class_parameters_are_checked():
    with pytest.raises(InvalidParameter):
        Starlike(p=2, alpha=2)
    with pytest.raises(InvalidDelta):
        NClass(p=1, mu=1, eta=1, delta=1.0)
    with pytest.raises(InvalidParameter):
        Bazilevic(eta=-2)
    with pytest.raises(InvalidParameter):
        make_class('spirallike', p=1)
    assert make_class('M', p=2, lam=0.5, gamma=0.25, beta=1) == MClass(2, 1, 0.5, 0.25, 1)


def test_monomial_is_extremal():
    report = membership(monomial(3), Convex(p=3, alpha=1), PLAN)
    assert report.holds
    assert abs(report.margin - 2) < 1e-12
    assert report.points_total == PLAN.size
    assert report.points_excluded == 0


def test_koebe_function():
    plan = SamplingPlan(radii=(0.2, 0.5, 0.8), angles_per_ring=32)
    assert membership(koebe(), Starlike(p=1, alpha=0), plan).holds
    # convexity fails beyond |z| = 2 - sqrt(3)
    report = membership(koebe(), Convex(p=1, alpha=0), plan.replace(radii=(0.2, 0.5)))
    assert not report.holds
    z, value = report.worst_points[0]
    assert abs(z + 0.5) < 1e-12
    assert abs(value + 1) < 1e-9


def test_function_and_class_must_agree_on_p():
    with pytest.raises(InvalidParameter):
        membership(monomial(2), Starlike(p=1), PLAN)


def test_worst_points_are_sorted():
    report = membership(MonomialPlusTerm(1, 1, 0.3j), Starlike(p=1, alpha=0.5), PLAN, worst=4)
    values = [v for _, v in report.worst_points]
    assert len(values) == 4
    assert values == sorted(values)
    assert values[0] == report.min_value


@given(st.complex_numbers(max_magnitude=0.2, allow_nan=False, allow_infinity=False)
       .filter(lambda a: abs(a) > 1e-3))
@settings(max_examples=20, deadline=None)
def test_reductions_give_identical_verdicts(a):
    for left, right in reduction_table():
        f = MonomialPlusTerm(left.p, getattr(left, 'n', 1), a)
        x, y = membership(f, left, PLAN), membership(f, right, PLAN)
        assert x.holds == y.holds
        assert abs(x.margin - y.margin) < 1e-10


def test_reduction_table_rows():
    rows = reduction_table()
    assert len(rows) == 8
    kinds = set((a.kind, b.kind) for a, b in rows)
    assert kinds == set([('M', 'starlike'), ('N', 'starlike'), ('M', 'convex'),
                         ('M', 'T'), ('N', 'bazilevic')])
    assert all(a.operator_params().p == b.operator_params().p for a, b in rows)
