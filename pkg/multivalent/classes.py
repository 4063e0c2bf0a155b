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
Function classes and empirical membership.

Every class is defined by a lower bound on the real part of an expression:
either the operator J at class-specific (lam, mu, eta), or the power product
P. A class is described by a ``ClassId``; the expression is chosen by the
first registered ``ClassPredicate`` that is suitable for it.

    >>> from multivalent.functions import monomial
    >>> report = membership(monomial(2), Starlike(p=2, alpha=0.5),
    ...                     SamplingPlan(radii=(0.5, 0.9), angles_per_ring=16))
    >>> report.holds, round(report.margin, 12)
    (True, 1.5)
"""

import logging

import numpy

from .errors import InvalidDelta, InvalidParameter
from .operators import J_on_grid, OperatorParams, P_on_grid, capacity_C, side_moduli
from .sampling import SamplingPlan, worst_points
from .settings import WORST_POINTS


logger = logging.getLogger(__name__)


class ClassId(object):
    """
    Base class of the class descriptions. ``bound`` is the order (alpha,
    beta or delta) the real part must exceed; ``operator_params`` gives the
    (p, n, lam, mu, eta) the defining expression is evaluated with.
    """
    kind = None
    fields = ()

    def __repr__(self):
        return '<%s %s>' % (self.__class__.__name__, ' '.join(
            '%s=%g' % (k, getattr(self, k)) for k in self.fields))

    def __eq__(self, other):
        return type(self) is type(other) and self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash((self.kind,) + tuple(sorted(self.to_dict().items())))

    def to_dict(self):
        return dict((k, getattr(self, k)) for k in self.fields)

    @property
    def bound(self):
        raise NotImplementedError

    def operator_params(self):
        raise NotImplementedError


def _order_below_p(name, value, p):
    if not 0 <= value < p:
        raise InvalidParameter('%s must lie in [0, p) = [0, %d), got %r' % (name, p, value))
    return float(value)


class Starlike(ClassId):
    "S*_{p,n}(alpha): Re zf'/f > alpha."
    kind = 'starlike'
    fields = ('p', 'n', 'alpha')

    def __init__(self, p=1, n=1, alpha=0.0):
        self.p, self.n = p, n
        self.alpha = _order_below_p('alpha', alpha, p)

    bound = property(lambda self: self.alpha)

    def operator_params(self):
        return OperatorParams(self.p, self.n, 0.0, 1.0, 0.0)


class Convex(ClassId):
    "C_{p,n}(alpha): Re(1 + zf''/f') > alpha."
    kind = 'convex'
    fields = ('p', 'n', 'alpha')

    def __init__(self, p=1, n=1, alpha=0.0):
        self.p, self.n = p, n
        self.alpha = _order_below_p('alpha', alpha, p)

    bound = property(lambda self: self.alpha)

    def operator_params(self):
        # 1 + zf''/f' = zF'/F for F = zf'
        return OperatorParams(self.p, self.n, 1.0, 1.0, 0.0)


class TLambda(ClassId):
    "T_lam(p; alpha) in A(p): Re zF'/F > alpha."
    kind = 'T'
    fields = ('p', 'lam', 'alpha')
    n = 1

    def __init__(self, p=1, lam=0.0, alpha=0.0):
        self.p, self.lam = p, lam
        self.alpha = _order_below_p('alpha', alpha, p)

    bound = property(lambda self: self.alpha)

    def operator_params(self):
        return OperatorParams(self.p, 1, self.lam, 1.0, 0.0)


class MClass(ClassId):
    "M^lam_{p,n}(gamma; beta): Re[(1-gamma) zF'/F + gamma(1 + zF''/F')] > beta."
    kind = 'M'
    fields = ('p', 'n', 'lam', 'gamma', 'beta')

    def __init__(self, p=1, n=1, lam=0.0, gamma=0.0, beta=0.0):
        self.p, self.n, self.lam, self.gamma = p, n, lam, float(gamma)
        self.beta = _order_below_p('beta', beta, p)

    bound = property(lambda self: self.beta)

    def operator_params(self):
        return OperatorParams(self.p, self.n, self.lam, 1 - self.gamma, self.gamma)


class NClass(ClassId):
    "N^lam_{p,n}(mu, eta; delta): Re[(F/z^p)^mu (F'/z^(p-1))^eta] > delta."
    kind = 'N'
    fields = ('p', 'n', 'lam', 'mu', 'eta', 'delta')

    def __init__(self, p=1, n=1, lam=0.0, mu=1.0, eta=0.0, delta=0.0):
        self.p, self.n, self.lam = p, n, lam
        self.mu, self.eta = float(mu), float(eta)
        C = capacity_C(self.operator_params())
        if not 0 <= delta < C:
            raise InvalidDelta('delta must lie in [0, C) with C = %.17g, got %r' % (C, delta))
        self.delta = float(delta)

    bound = property(lambda self: self.delta)

    def operator_params(self):
        return OperatorParams(self.p, self.n, self.lam, self.mu, self.eta)


class Bazilevic(ClassId):
    "B_n(eta; beta) = N^0_{1,n}(1, eta; beta)."
    kind = 'bazilevic'
    fields = ('n', 'eta', 'beta')
    p = 1
    lam = 0.0
    mu = 1.0

    def __init__(self, n=1, eta=0.0, beta=0.0):
        if eta < -1:
            raise InvalidParameter('eta must be at least -1, got %r' % eta)
        self.n, self.eta = n, float(eta)
        self.beta = _order_below_p('beta', beta, 1)

    bound = property(lambda self: self.beta)

    def operator_params(self):
        return OperatorParams(1, self.n, 0.0, 1.0, self.eta)


CLASS_KINDS = dict((c.kind, c) for c in (Starlike, Convex, TLambda, MClass, NClass, Bazilevic))


def make_class(kind, **params):
    try:
        return CLASS_KINDS[kind](**params)
    except KeyError:
        raise InvalidParameter('unknown class "%s", expected one of: %s'
                               % (kind, ', '.join(sorted(CLASS_KINDS))))


class ClassPredicate(object):
    """
    Evaluates the defining expression of a class over a grid. Each subclass
    knows the class descriptions it is suitable for; ``create`` picks the
    first registered one that passes the test.
    """
    _predicates = []

    def __init__(self, class_id):
        self.class_id = class_id
        self.params = class_id.operator_params()

    def __repr__(self):
        return '<%s for %r>' % (self.__class__.__name__, self.class_id)

    @classmethod
    def register(cls, factory):
        """Registers a predicate class. Classes are checked one by one in the
        order they are registered.
        """
        cls._predicates.append(factory)
        return factory

    @classmethod
    def create(cls, class_id):
        # chosen by caller
        if cls is not ClassPredicate:
            return cls(class_id)
        # autoselect
        for factory in cls._predicates:
            if factory.suitable_for(class_id):
                return factory(class_id)
        raise InvalidParameter('no predicate for %r' % class_id)

    @classmethod
    def suitable_for(cls, class_id):
        raise NotImplementedError

    def values(self, f, z, plan):
        "Masked real parts of the defining expression, and the branch-crossing count."
        raise NotImplementedError


@ClassPredicate.register
class OperatorPredicate(ClassPredicate):
    "Re J at the class parameters."

    @classmethod
    def suitable_for(cls, class_id):
        return isinstance(class_id, (Starlike, Convex, TLambda, MClass))

    def values(self, f, z, plan):
        J = J_on_grid(f, self.params, z, plan.denominator_epsilon, plan.origin_epsilon)
        return J.real, 0


@ClassPredicate.register
class PowerPredicate(ClassPredicate):
    "Re P on the origin-rooted branch."

    @classmethod
    def suitable_for(cls, class_id):
        return isinstance(class_id, (NClass, Bazilevic))

    def values(self, f, z, plan):
        P, crossed = P_on_grid(f, self.params, z, plan.denominator_epsilon, plan.origin_epsilon)
        return P.real, int(crossed.sum())


class MembershipReport(object):
    "Empirical membership of one function in one class over a grid."

    def __init__(self, class_id, function, min_value, side_min_modulus, points_total,
                 points_excluded, worst_points, branch_crossings, eps_zero, values=None):
        self.class_id = class_id
        self.function = function
        self.min_value = min_value
        self.margin = min_value - class_id.bound
        self.side_min_modulus = side_min_modulus
        self.points_total = points_total
        self.points_excluded = points_excluded
        self.worst_points = worst_points
        self.branch_crossings = branch_crossings
        # masked array of the defining real parts, one per grid point
        self.values = values
        self.holds = bool(self.margin > 0 and side_min_modulus > eps_zero)

    def __repr__(self):
        return '<MembershipReport %r margin=%.6g holds=%s>' % (
            self.class_id, self.margin, self.holds)

    @property
    def certified(self):
        return self.holds


def membership(f, class_id, plan=None, worst=WORST_POINTS):
    """
    Minimum over the grid of the defining real part of ``class_id``, its
    margin over the class order, and the smallest modulus of the normalized
    F and F' (the side condition F F' != 0). Points where the expression
    cannot be evaluated are excluded and counted, not raised.
    """
    plan = plan or SamplingPlan.default()
    if f.p != class_id.p:
        raise InvalidParameter('function has p=%d, class has p=%d' % (f.p, class_id.p))
    predicate = ClassPredicate.create(class_id)
    z = plan.points
    values, crossings = predicate.values(f, z, plan)
    excluded = int(numpy.ma.count_masked(values))
    if excluded:
        logger.debug('%r: %d of %d points excluded', class_id, excluded, plan.size)
    min_value = float(values.min()) if excluded < plan.size else float('nan')
    side = float(side_moduli(f, predicate.params, z, plan.origin_epsilon).min())
    return MembershipReport(class_id, f, min_value, side, plan.size, excluded,
                            worst_points(values, z, worst), crossings,
                            plan.denominator_epsilon, values)


def reduction_table(p=2, n=1, beta=0.5, lam=0.5, eta=0.5):
    """
    Pairs of class descriptions that define the same class:

    * M^0_{p,n}(0; b) = N^0_{p,n}(-1, 1; b) = S*_{p,n}(b), also for p = 1
    * M^1_{p,n}(0; b) = C_{p,n}(b), also for p = 1
    * M^lam_{p,1}(0; b) = T_lam(p; b)
    * N^0_{1,n}(1, eta; b) = B_n(eta; b)

    The rows with p = 1 use the order ``beta / p`` so that it stays in [0, 1).

        >>> [a.kind + '=' + b.kind for a, b in reduction_table()][:3]
        ['M=starlike', 'N=starlike', 'M=starlike']
    """
    b1 = beta / p
    return [
        (MClass(p, n, 0.0, 0.0, beta), Starlike(p, n, beta)),
        (NClass(p, n, 0.0, -1.0, 1.0, beta), Starlike(p, n, beta)),
        (MClass(1, n, 0.0, 0.0, b1), Starlike(1, n, b1)),
        (NClass(1, n, 0.0, -1.0, 1.0, b1), Starlike(1, n, b1)),
        (MClass(p, n, 1.0, 0.0, beta), Convex(p, n, beta)),
        (MClass(1, n, 1.0, 0.0, b1), Convex(1, n, b1)),
        (MClass(p, 1, lam, 0.0, beta), TLambda(p, lam, beta)),
        (NClass(1, n, 0.0, 1.0, eta, b1), Bazilevic(n, eta, b1)),
    ]
