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
Closed-form thresholds and bounds.

The threshold k(mu, eta, lam; delta) of the second theorem is piecewise in
delta, with the break at C/2 where C is the capacity constant:

    >>> k_value(mu=-1, eta=1, lam=0, delta=0.25)
    -0.16666666666666666
    >>> named_threshold('varsigma_cor12', OperatorParams(p=2), 1.0)
    -0.5

Every named threshold is k at substituted parameters, and the |a| bounds of
the worked examples are plain formulas in p and M or delta:

    >>> round(example_bound_a('ex311', 1, 1), 6)
    0.078689
"""

import math

import numpy

from .errors import InvalidDelta, InvalidParameter
from .operators import OperatorParams, capacity_C


def k_value(mu, eta, lam, delta, p=1, n=1):
    """
    k(mu, eta, lam; delta). The first formula covers [0, C/2] and the second
    (C/2, C); both give ``p(mu+eta) - n/2`` at C/2.
    """
    params = OperatorParams(p=p, n=n, lam=lam, mu=mu, eta=eta)
    C = capacity_C(params)
    if not 0 <= delta < C:
        raise InvalidDelta('delta must lie in [0, %.17g), got %r' % (C, delta))
    if delta <= C / 2:
        return params.weight - n * delta / (2 * (C - delta))
    return params.weight - n * (C - delta) / (2 * delta)


# name -> (mu, eta, lam) as a function of the given (mu, eta, lam, gamma)
_SUBSTITUTIONS = {
    'k_general':        lambda mu, eta, lam, gamma: (mu, eta, lam),
    'nu':               lambda mu, eta, lam, gamma: (mu, eta, 0.0),
    'xi':               lambda mu, eta, lam, gamma: (1 - gamma, gamma, 0.0),
    'sigma':            lambda mu, eta, lam, gamma: (mu, eta, 1.0),
    'varrho':           lambda mu, eta, lam, gamma: (1 - gamma, gamma, 1.0),
    'rho_cor9':         lambda mu, eta, lam, gamma: (1 - gamma, gamma, lam),
    'rho1_cor10':       lambda mu, eta, lam, gamma: (1.0, 0.0, lam),
    'varsigma_cor12':   lambda mu, eta, lam, gamma: (-1.0, 1.0, lam),
    'varsigma1_cor14':  lambda mu, eta, lam, gamma: (1.0, -1.0, lam),
}

THRESHOLD_NAMES = tuple(sorted(_SUBSTITUTIONS))

_ALIASES = {'k': 'k_general', 'rho': 'rho_cor9', 'rho1': 'rho1_cor10',
            'varsigma': 'varsigma_cor12', 'varsigma1': 'varsigma1_cor14'}


class ThresholdSpec(object):
    """
    A named threshold with the parameters it is evaluated at. ``gamma``
    is read by the forms built on mu = 1-gamma, eta = gamma and defaults
    to ``eta``.
    """

    def __init__(self, name, p=1, n=1, lam=0.0, mu=0.0, eta=0.0, delta=0.0, gamma=None):
        name = _ALIASES.get(name, name)
        if name not in _SUBSTITUTIONS:
            raise InvalidParameter('unknown threshold "%s", expected one of: %s'
                                   % (name, ', '.join(THRESHOLD_NAMES)))
        self.name = name
        self.p = p
        # the rho1 form lives in A(p) = A(p,1)
        self.n = 1 if name == 'rho1_cor10' else n
        self.lam = lam
        self.mu = mu
        self.eta = eta
        self.gamma = eta if gamma is None else gamma
        self.delta = delta

    def __repr__(self):
        return '<ThresholdSpec %s delta=%g>' % (self.name, self.delta)

    @property
    def bound_params(self):
        mu, eta, lam = _SUBSTITUTIONS[self.name](self.mu, self.eta, self.lam, self.gamma)
        return OperatorParams(p=self.p, n=self.n, lam=lam, mu=mu, eta=eta)

    @property
    def capacity(self):
        return capacity_C(self.bound_params)

    def value(self):
        b = self.bound_params
        return k_value(b.mu, b.eta, b.lam, self.delta, b.p, b.n)


def k_threshold(spec):
    "Value of a ThresholdSpec."
    return spec.value()


def named_threshold(name, params, delta, gamma=None):
    "The named threshold at the parameters of an OperatorParams."
    spec = ThresholdSpec(name, params.p, params.n, params.lam, params.mu, params.eta,
                         delta, gamma)
    return spec.value()


def re_H_bounds(rho):
    """
    Range of Re(z/(1+z)) over |z| <= rho:

        >>> re_H_bounds(0.5)
        (-1.0, 0.3333333333333333)
    """
    if not 0 <= rho < 1:
        raise InvalidParameter('rho must lie in [0,1), got %r' % rho)
    return (-rho / (1 - rho), rho / (1 + rho))


def zphi_bounds(a_abs, p):
    """
    Two-sided estimate of Re(z phi'/(p + phi)) for
    phi = a(p+2)z/(p+1+a(p+2)z): the value stays within +-2x/(1-x^2),
    x = |a|(p+2)/p.
    """
    x = a_abs * (p + 2.0) / p
    if not 0 <= x < 1:
        raise InvalidParameter('|a|(p+2)/p must lie in [0,1), got %r' % x)
    bound = 2 * x / (1 - x * x)
    return (-bound, bound)


def _largest_root(a2, a1, a0):
    "Largest nonnegative real root of a2 x^2 + a1 x + a0, or 0."
    roots = numpy.roots([a2, a1, a0]) if (a2 or a1) else []
    real = [r.real for r in numpy.atleast_1d(roots) if abs(r.imag) < 1e-14 and r.real >= 0]
    return max(real) if real else 0.0


def _mixed_sum_root(mu, eta, p, n, target):
    """
    Largest x >= 0 with mu x/(1+x) + eta q x/(p+qx) = target, q = p+n:
    cleared of denominators this is a quadratic in x.
    """
    q = p + n
    return _largest_root(q * (mu + eta - target),
                         mu * p + eta * q - target * (p + q),
                         -target * p)


def _delta_target(delta, C):
    "Right-hand side of the delta conditions: delta/(2(delta-C)) or (delta-C)/(2 delta)."
    if delta <= C / 2:
        return delta / (2 * (delta - C))
    return (delta - C) / (2 * delta)


def _check_range(name, value, lo, hi, hi_open=True):
    ok = lo <= value < hi if hi_open else lo <= value <= hi
    if not ok:
        raise InvalidParameter('%s must lie in [%g, %g%s, got %r'
                               % (name, lo, hi, ')' if hi_open else ']', value))


def _ex311(p, M, **kw):
    if M < p:
        raise InvalidParameter('M must be at least p = %d, got %r' % (p, M))
    return p / (p + 2.0) * (-(M + p) + math.sqrt((M + p) ** 2 + M ** 2)) / M


def _ex312(p, delta, **kw):
    _check_range('delta', delta, 0, p)
    if delta == 0:
        return 0.0
    first = second = 0.0
    if delta <= p / 2.0:
        first = (-2 * (p - delta) + math.sqrt(4 * (p - delta) ** 2 + delta ** 2)) / delta
    if delta >= p / 2.0:
        second = (-2 * delta + math.sqrt((p - delta) ** 2 + 4 * delta ** 2)) / (p - delta)
    return p / (p + 2.0) * max(first, second)


def _ex313(p, M, **kw):
    if M < 1.0 / p:
        raise InvalidParameter('M must be at least 1/p = %g, got %r' % (1.0 / p, M))
    return p / (p + 2.0) * (-(M * p + 1) + math.sqrt((M * p + 1) ** 2 + (M * p) ** 2)) / (M * p)


def _ex314(p, delta, **kw):
    _check_range('delta', delta, 0, 1.0 / p)
    if delta == 0:
        return 0.0
    dp = delta * p
    first = second = 0.0
    if dp <= 0.5:
        first = (-2 * (1 - dp) + math.sqrt(4 * (1 - dp) ** 2 + dp ** 2)) / dp
    if dp >= 0.5:
        second = (-2 * dp + math.sqrt((1 - dp) ** 2 + 4 * dp ** 2)) / (1 - dp)
    return p / (p + 2.0) * max(first, second)


def _ex31(p, M, n=1, mu=1.0, eta=1.0, **kw):
    if mu < 0 or eta < 0 or mu + eta <= 0:
        raise InvalidParameter('needs mu, eta >= 0 with mu + eta > 0')
    C = p ** eta
    if M < C:
        raise InvalidParameter('M must be at least p^eta = %g, got %r' % (C, M))
    target = M / (M + C)
    cap = p / float(p + n)
    if target >= mu + eta:
        return cap
    return min(_mixed_sum_root(mu, eta, p, n, target), cap)


def _ex32(p, delta, n=1, mu=-1.0, eta=-1.0, **kw):
    if mu > 0 or eta > 0 or mu + eta >= 0:
        raise InvalidParameter('needs mu, eta <= 0 with mu + eta < 0')
    C = p ** eta
    _check_range('delta', delta, 0, C)
    target = _delta_target(delta, C)
    cap = p / float(p + n)
    if target <= mu + eta:
        return cap
    return min(_mixed_sum_root(mu, eta, p, n, target), cap)


def _ex33(p, M, gamma=1.0, **kw):
    if gamma < 0:
        raise InvalidParameter('gamma must be nonnegative, got %r' % gamma)
    C = p ** gamma
    if M < C:
        raise InvalidParameter('M must be at least p^gamma = %g, got %r' % (C, M))
    target = M / (M + C)
    # x + gamma x/(p+x) = target
    return min(_largest_root(1.0, p + gamma - target, -target * p), float(p))


def _ex34(p, delta, gamma=1.0, **kw):
    if gamma < 0:
        raise InvalidParameter('gamma must be nonnegative, got %r' % gamma)
    C = p ** gamma
    _check_range('delta', delta, 0, C)
    target = _delta_target(delta, C)
    # -x + gamma x/(p+x) = target, as printed
    return min(_largest_root(1.0, p + target - gamma, target * p), float(p))


def _ex35(p, n=1, **kw):
    return p ** 2 / float((p + n) ** 2)


def _ex37(p, **kw):
    return (2 * p + 1 - math.sqrt(4 * p + 1)) / 2.0


def _ex39(p, n=1, **kw):
    return p * (p + 1) / float((p + n) * (p + n + 1))


def _ex310(p, delta, **kw):
    _check_range('delta', delta, 0, (p + 1) / 2.0)
    quarter = (p + 1) / 4.0
    first = second = 0.0
    if delta <= quarter:
        first = (p + 1) * delta / ((p + 2.0) * (p + 1 - delta))
    if delta >= quarter:
        second = (p + 1) * (p + 1 - 2 * delta) / ((p + 2.0) * (p + 1 + 2 * delta))
    return min(max(first, second), p / (p + 2.0))


_EXAMPLE_BOUNDS = {
    'ex31': (_ex31, 'M'), 'ex32': (_ex32, 'delta'),
    'ex33': (_ex33, 'M'), 'ex34': (_ex34, 'delta'),
    'ex35': (_ex35, None), 'ex36': (_ex35, None),
    'ex37': (_ex37, None), 'ex38': (_ex37, None),
    'ex39': (_ex39, None), 'ex310': (_ex310, 'delta'),
    'ex311': (_ex311, 'M'), 'ex312': (_ex312, 'delta'),
    'ex313': (_ex313, 'M'), 'ex314': (_ex314, 'delta'),
}

EXAMPLE_IDS = tuple(sorted(_EXAMPLE_BOUNDS, key=lambda k: int(k[3:])))


def example_bound_a(example_id, p, M_or_delta=None, **extra):
    """
    Largest |a| allowed by the conditions of a worked example, for
    ``p`` and M or delta (whichever the example uses). Ids are accepted as
    ``ex311`` or ``ex3.11``. ``extra`` carries n, mu, eta or gamma for the
    examples that use them.

    Where an example splits its condition by delta and delta sits exactly
    on the split, both formulas are valid and the larger bound is returned.
    """
    key = example_id.replace('.', '')
    try:
        func, role = _EXAMPLE_BOUNDS[key]
    except KeyError:
        raise InvalidParameter('no closed-form |a| bound for "%s"' % example_id)
    if int(p) != p or p < 1:
        raise InvalidParameter('p must be a positive integer, got %r' % p)
    if role is None:
        return func(int(p), **extra)
    if M_or_delta is None:
        raise InvalidParameter('%s needs %s' % (example_id, role))
    return func(int(p), M_or_delta, **extra)
