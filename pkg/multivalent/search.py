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

" Bisection for the largest feasible |a|. "

import cmath
import logging

import numpy

from .errors import InvalidParameter, NoFeasibleA
from .functions import MonomialPlusTerm
from .operators import J_on_grid, OperatorParams
from .sampling import SamplingPlan
from .settings import BISECT_FLOOR, BISECT_TOLERANCE
from .thresholds import named_threshold


logger = logging.getLogger(__name__)


def largest_feasible(feasible, lo, hi, tol=BISECT_TOLERANCE):
    """
    Bisects ``[lo, hi]`` for the boundary of a predicate that holds at
    ``lo`` and fails at ``hi``. Returns a point where it holds, within
    ``tol`` of the boundary.

        >>> round(largest_feasible(lambda x: x * x < 2, 0, 2, 1e-9), 6)
        1.414214
    """
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        if feasible(mid):
            lo = mid
        else:
            hi = mid
        logger.debug('bisect [%.9g, %.9g]', lo, hi)
    return lo


def _operator_margin(f, params, rho, plan):
    J = J_on_grid(f, params, plan.points, plan.denominator_epsilon, plan.origin_epsilon)
    if numpy.ma.count_masked(J):
        return -numpy.inf
    return float(J.real.min()) - rho


def search_max_a(template='ex3.9', phase=0.0, plan=None, p=1, n=1, lam=0.5, gamma=0.5,
                 delta=0.25, tol=BISECT_TOLERANCE, floor=BISECT_FLOOR):
    """
    Largest |a| in (0, p(p+1)/((p+n)(p+n+1))] for which
    ``f = template(a)``, with arg(a) = ``phase``, satisfies
    Re[(1-gamma) zF'/F + gamma(1 + zF''/F')] > rho(gamma, lam; delta) on the
    grid, i.e. lies in M^lam_{p,n}(gamma; rho). The default template is
    ``z^p + a z^(p+n)``; a callable ``a -> FunctionSpec`` may be given
    instead.

    Raises NoFeasibleA when even |a| = ``floor`` fails.
    """
    if template == 'ex3.9':
        def template(a):
            return MonomialPlusTerm(p, n, a)
    elif not callable(template):
        raise InvalidParameter('unknown search template %r' % (template,))
    plan = plan or SamplingPlan.default()
    params = OperatorParams(p, n, lam, 1 - gamma, gamma)
    rho = named_threshold('rho_cor9', params, delta, gamma)
    unit = cmath.exp(1j * phase)

    def feasible(size):
        return _operator_margin(template(size * unit), params, rho, plan) > 0

    upper = p * (p + 1.0) / ((p + n) * (p + n + 1))
    if feasible(upper):
        return upper
    if not feasible(floor):
        raise NoFeasibleA('no |a| >= %g satisfies Re J > rho = %.17g (p=%d, n=%d, gamma=%g, '
                          'delta=%g)' % (floor, rho, p, n, gamma, delta))
    found = largest_feasible(feasible, floor, upper, tol)
    logger.info('largest feasible |a| = %.9g at phase %g', found, phase)
    return found
