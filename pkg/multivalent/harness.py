# -*- coding: utf-8 -*-
#
#  Copyright (c) 2026 Multivalent Checks contributors
#
#  This file is part of Multivalent Checks.
#
#  Multivalent Checks is free software under terms of the GNU Lesser
#  General Public License version 3 (LGPLv3) as published by the Free
#  Software Foundation. See the file README for copying conditions.
#

"""
Empirical hypothesis -> conclusion checks of the two theorems over a disk
grid, and the catalog runners on top of them.

A report is *vacuous* when the hypothesis fails somewhere on the grid; the
implication then holds trivially. ``implication_ok`` is false only when the
hypothesis holds everywhere and the conclusion does not.

    >>> from multivalent.functions import monomial
    >>> from multivalent.operators import OperatorParams
    >>> plan = SamplingPlan(radii=(0.5, 0.9), angles_per_ring=16)
    >>> report = verify_theorem1(monomial(2), OperatorParams(p=2, mu=1, eta=1), 4.0, plan)
    >>> report.hypothesis_holds, report.conclusion_holds, report.implication_ok
    (True, True, True)
    >>> round(report.conclusion_min_margin, 12)
    4.0
"""

import logging
import time
import warnings
from concurrent.futures import ThreadPoolExecutor

import numpy

from .catalog import fixture_ids, get_fixture
from .classes import NClass, membership
from .errors import PreconditionViolated
from .operators import J_on_grid, P_on_grid, capacity_C, side_moduli
from .sampling import SamplingPlan, worst_points
from .search import search_max_a
from .settings import MAX_EXCLUDED_FRACTION, WORST_POINTS
from .thresholds import k_value

__all__ = ['VerificationReport', 'verify_theorem1', 'verify_theorem2', 'verify_fixture',
           'verify_catalog', 'search_max_a']


logger = logging.getLogger(__name__)


class VerificationReport(object):
    """
    Outcome of one run. Margins are signed: positive means the strict
    inequality holds at the worst grid point. ``worst_points`` lists the
    points with the smallest conclusion margins as (z, margin) pairs.
    """

    def __init__(self, fixture_id, theorem, params, plan, role_value,
                 points_total, points_excluded, hypothesis_min_margin,
                 conclusion_min_margin, worst_points, branch_crossings=0,
                 side_min_modulus=None, conclusion_holds=None, variant=None,
                 notes='', wall_time=0.0):
        self.fixture_id = fixture_id
        self.theorem = theorem
        self.params = params
        self.plan = plan
        self.role = 'M' if theorem == 1 else 'delta'
        self.role_value = role_value
        self.points_total = points_total
        self.points_excluded = points_excluded
        self.hypothesis_min_margin = hypothesis_min_margin
        self.conclusion_min_margin = conclusion_min_margin
        self.hypothesis_holds = bool(hypothesis_min_margin > 0)
        if conclusion_holds is None:
            conclusion_holds = conclusion_min_margin > 0
        self.conclusion_holds = bool(conclusion_holds)
        self.implication_ok = (not self.hypothesis_holds) or self.conclusion_holds
        self.worst_points = worst_points
        self.branch_crossings = branch_crossings
        self.side_min_modulus = side_min_modulus
        self.variant = variant
        self.notes = notes
        self.wall_time = wall_time

    def __repr__(self):
        return '<VerificationReport %s hypothesis=%s conclusion=%s implication_ok=%s>' % (
            self.fixture_id, self.hypothesis_holds, self.conclusion_holds, self.implication_ok)

    @property
    def vacuous(self):
        return not self.hypothesis_holds


def _masked_min(values, excluded):
    kept = numpy.asarray(values)[~excluded]
    return float(kept.min()) if kept.size else float('nan')


def _check_exclusions(excluded, plan, fixture_id):
    count = int(excluded.sum())
    if count > MAX_EXCLUDED_FRACTION * plan.size:
        raise PreconditionViolated("F F' != 0", '%s: %d of %d grid points excluded'
                                   % (fixture_id, count, plan.size))
    if count:
        logger.debug('%s: %d of %d points excluded', fixture_id, count, plan.size)
    return count


def _warn_crossings(fixture_id, crossings):
    if crossings:
        warnings.warn('%s: %d grid points leave the principal branch; P is taken on '
                      'the branch continued from the origin' % (fixture_id, crossings),
                      UserWarning, 3)


def _log(report):
    logger.info('%s: hypothesis %.6g, conclusion %.6g, implication %s',
                report.fixture_id, report.hypothesis_min_margin,
                report.conclusion_min_margin, 'ok' if report.implication_ok else 'VIOLATED')


def _side_notes(side, plan, fixture_id, notes):
    "Adds a note when F F' gets within the denominator epsilon of zero on the grid."
    if side > plan.denominator_epsilon:
        return notes
    logger.warning("%s: F F' nearly vanishes on the grid (min modulus %.3g)", fixture_id, side)
    note = "F F' nearly vanishes on the grid (min modulus %.3g)" % side
    return '; '.join(x for x in (notes, note) if x)


def verify_theorem1(f, params, M, plan=None, fixture_id='thm1', worst=WORST_POINTS,
                    variant=None, notes=''):
    """
    Hypothesis ``Re J < p(mu+eta) + nM/(M+C)``, conclusion ``|P - C| < M``,
    both as minima of their margins over the grid.
    """
    started = time.perf_counter()
    plan = plan or SamplingPlan.default()
    C = capacity_C(params)
    if M < C:
        raise PreconditionViolated('M >= C', 'M = %r, C = %.17g' % (M, C))
    z = plan.points
    J = J_on_grid(f, params, z, plan.denominator_epsilon, plan.origin_epsilon)
    P, crossed = P_on_grid(f, params, z, plan.denominator_epsilon, plan.origin_epsilon)
    excluded = numpy.ma.getmaskarray(J) | numpy.ma.getmaskarray(P)
    count = _check_exclusions(excluded, plan, fixture_id)

    bound = params.weight + params.n * M / (M + C)
    hypothesis = bound - J.data.real
    conclusion = M - numpy.abs(P.data - C)
    crossings = int((crossed & ~excluded).sum())
    _warn_crossings(fixture_id, crossings)
    side = float(side_moduli(f, params, z, plan.origin_epsilon).min())
    report = VerificationReport(
        fixture_id, 1, params, plan, M, plan.size, count,
        _masked_min(hypothesis, excluded), _masked_min(conclusion, excluded),
        worst_points(numpy.ma.masked_array(conclusion, mask=excluded), z, worst),
        crossings, side, variant=variant, notes=_side_notes(side, plan, fixture_id, notes),
        wall_time=time.perf_counter() - started)
    _log(report)
    return report


def verify_theorem2(f, params, delta, plan=None, fixture_id='thm2', worst=WORST_POINTS,
                    variant=None, notes=''):
    """
    Hypothesis ``Re J > k(mu, eta, lam; delta)``; the conclusion is
    membership of f in N^lam_{p,n}(mu, eta; delta), which also asks for the
    side condition F F' != 0. Both margins are taken over the points where
    J and the class expression are both defined.
    """
    started = time.perf_counter()
    plan = plan or SamplingPlan.default()
    # raises InvalidDelta outside [0, C)
    target = NClass(params.p, params.n, params.lam, params.mu, params.eta, delta)
    k = k_value(params.mu, params.eta, params.lam, delta, params.p, params.n)
    z = plan.points
    J = J_on_grid(f, params, z, plan.denominator_epsilon, plan.origin_epsilon)
    member = membership(f, target, plan, worst)
    excluded = numpy.ma.getmaskarray(J) | numpy.ma.getmaskarray(member.values)
    count = _check_exclusions(excluded, plan, fixture_id)

    hypothesis = J.data.real - k
    conclusion = member.values.data - delta
    margin = _masked_min(conclusion, excluded)
    side = member.side_min_modulus
    _warn_crossings(fixture_id, member.branch_crossings)
    report = VerificationReport(
        fixture_id, 2, params, plan, delta, plan.size, count,
        _masked_min(hypothesis, excluded), margin,
        worst_points(numpy.ma.masked_array(conclusion, mask=excluded), z, worst),
        member.branch_crossings, side,
        conclusion_holds=margin > 0 and side > plan.denominator_epsilon, variant=variant,
        notes=_side_notes(side, plan, fixture_id, notes), wall_time=time.perf_counter() - started)
    _log(report)
    return report


def verify_fixture(id, plan=None, **overrides):
    """
    Checks the closed-form preconditions of a catalog fixture, then runs it
    through its theorem. ``overrides`` go to the fixture builder.
    """
    fixture = get_fixture(id, plan=plan, **overrides)
    fixture.check_preconditions()
    kw = dict(plan=plan, fixture_id=fixture.id, variant=fixture.variant, notes=fixture.notes)
    if fixture.theorem == 1:
        return verify_theorem1(fixture.f, fixture.params, fixture.M, **kw)
    return verify_theorem2(fixture.f, fixture.params, fixture.delta, **kw)


def verify_catalog(plan=None, workers=1, ids=None):
    """
    Runs every fixture (or the given ids) with its defaults. Reports come
    back in catalog order whatever the number of workers.
    """
    plan = plan or SamplingPlan.default()
    ids = list(ids or fixture_ids())
    if workers <= 1:
        return [verify_fixture(id, plan) for id in ids]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda id: verify_fixture(id, plan), ids))
