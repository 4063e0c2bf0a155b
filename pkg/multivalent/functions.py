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
Members of A(p,n): normalized functions ``z**p + sum(a_k z**k, k >= p+n)``.

Three variants are known. Closed forms are evaluated exactly anywhere in the
disk, series are summed by Horner's rule:

    >>> f = make_function('monomial_plus', p=1, n=1, a=0.1)
    >>> f
    <MonomialPlusTerm p=1 n=1 a=(0.1+0j)>
    >>> eval_jet(f, 0.5)
    Jet2(f=(0.525+0j), f1=(1.1+0j), f2=(0.2+0j))

The same functions can be described with a tiny grammar (used by the CLI):

    >>> parse_function('exp_monomial:p=2,a=0.3')
    <ExponentialMonomial p=2 n=1 a=(0.3+0j)>
"""

import math
import re
from collections import namedtuple

import numpy

from .decorators import cached_property, inside_disk
from .errors import InvalidNormalization, InvalidParameter
from .series import (TruncatedSeries, order_of_vanishing, series_deriv,
                     series_exp)
from .settings import COEFF_EPSILON, DEFAULT_ORDER


Jet2 = namedtuple('Jet2', 'f f1 f2')


def _falling(m, k):
    "m (m-1) ... (m-k+1)"
    out = 1
    for i in range(k):
        out *= m - i
    return out


def _zpow(z, exponent):
    if exponent == 0:
        return numpy.ones_like(z)
    return z ** exponent


def _monomial_derivative(z, m, k):
    "k-th derivative of z**m, zero when k > m."
    if k > m:
        return numpy.zeros_like(z)
    return _falling(m, k) * _zpow(z, m - k)


def _positive_int(name, value):
    if int(value) != value or value < 1:
        raise InvalidParameter('%s must be a positive integer, got %r' % (name, value))
    return int(value)


class FunctionSpec(object):
    """
    Base class of the function variants. A subclass sets ``kind`` (its name
    in the mini-grammar) and implements ``derivatives``; registering it with
    ``FunctionSpec.register`` makes it available to ``make_function``.
    """
    kind = None
    _variants = {}

    p = 1
    n = 1

    @classmethod
    def register(cls, factory):
        "Registers a variant under its ``kind`` name. Usable as a decorator."
        cls._variants[factory.kind] = factory
        return factory

    @classmethod
    def variants(cls):
        return sorted(cls._variants)

    def derivatives(self, z, count=3):
        """Returns ``[f, f', ..., f^(count)]`` at ``z`` (scalar or array)."""
        raise NotImplementedError

    def jet(self, z):
        f, f1, f2 = self.derivatives(z, 2)
        return Jet2(f, f1, f2)

    def __call__(self, z):
        return self.derivatives(z, 0)[0]

    def to_series(self, order=DEFAULT_ORDER):
        raise NotImplementedError


@FunctionSpec.register
class MonomialPlusTerm(FunctionSpec):
    "f(z) = z**p + a z**(p+n)"
    kind = 'monomial_plus'

    def __init__(self, p, n, a):
        self.p = _positive_int('p', p)
        self.n = _positive_int('n', n)
        self.a = complex(a)
        if self.a == 0:
            raise InvalidParameter('a must be nonzero (use a monomial for z^p)')

    def __repr__(self):
        return '<MonomialPlusTerm p=%d n=%d a=%r>' % (self.p, self.n, self.a)

    def derivatives(self, z, count=3):
        z = numpy.asarray(z, dtype=complex)
        m = self.p + self.n
        return [(_monomial_derivative(z, self.p, k)
                 + self.a * _monomial_derivative(z, m, k))[()]
                for k in range(count + 1)]

    def to_series(self, order=DEFAULT_ORDER):
        return TruncatedSeries.from_terms({self.p: 1, self.p + self.n: self.a}, order)


@FunctionSpec.register
class ExponentialMonomial(FunctionSpec):
    "f(z) = z**p exp(a z), a member of A(p,1)"
    kind = 'exp_monomial'
    n = 1

    def __init__(self, p, a, n=1):
        self.p = _positive_int('p', p)
        if n != 1:
            raise InvalidParameter('z^p exp(az) lies in A(p,1); n must be 1, got %r' % n)
        self.a = complex(a)
        if self.a == 0:
            raise InvalidParameter('a must be nonzero (use a monomial for z^p)')

    def __repr__(self):
        return '<ExponentialMonomial p=%d n=1 a=%r>' % (self.p, self.a)

    def derivatives(self, z, count=3):
        # Leibniz rule on z^p * exp(az)
        z = numpy.asarray(z, dtype=complex)
        e = numpy.exp(self.a * z)
        out = []
        for k in range(count + 1):
            total = numpy.zeros_like(z)
            for j in range(k + 1):
                total = total + (math.comb(k, j) * self.a ** (k - j)
                                 * _monomial_derivative(z, self.p, j))
            out.append((total * e)[()])
        return out

    def to_series(self, order=DEFAULT_ORDER):
        if order <= self.p:
            return TruncatedSeries.zero(order)
        exp_az = series_exp(TruncatedSeries.monomial(1, self.a, order - self.p))
        return exp_az.shift(self.p)


@FunctionSpec.register
class GeneralSeries(FunctionSpec):
    """
    A member of A(p,n) given by its truncated expansion. The series must
    start with ``z**p`` (coefficient 1) and have no terms strictly between
    ``z**p`` and ``z**(p+n)``. ``p`` defaults to the lowest exponent and ``n``
    to the actual gap.
    """
    kind = 'series'

    def __init__(self, series, p=None, n=None):
        if series.is_zero:
            raise InvalidNormalization('the zero series is not in A(p,n)')
        if p is None:
            p = series.low_exp
        self.p = _positive_int('p', p)
        if series.low_exp != self.p:
            raise InvalidNormalization('series starts at z^%d, expected z^%d'
                                       % (series.low_exp, self.p))
        lead = series.coeffs[0]
        if abs(lead - 1) > COEFF_EPSILON:
            raise InvalidNormalization('leading coefficient must be 1, got %r' % complex(lead))
        gap = order_of_vanishing(series, TruncatedSeries.monomial(self.p, 1, series.order)) - self.p
        if n is None:
            n = max(min(gap, series.order - self.p), 1)
        self.n = _positive_int('n', n)
        if gap < self.n:
            raise InvalidNormalization('coefficient of z^%d is nonzero, A(%d,%d) needs a gap of %d'
                                       % (self.p + gap, self.p, self.n, self.n))
        self.series = series

    def __repr__(self):
        return '<GeneralSeries p=%d n=%d %r>' % (self.p, self.n, self.series)

    @cached_property
    def _derived(self):
        out = [self.series]
        for _ in range(3):
            out.append(series_deriv(out[-1]))
        return tuple(out)

    def derivatives(self, z, count=3):
        z = numpy.asarray(z, dtype=complex)
        chain = list(self._derived)
        while len(chain) <= count:
            chain.append(series_deriv(chain[-1]))
        return [chain[k](z) for k in range(count + 1)]

    def to_series(self, order=DEFAULT_ORDER):
        return self.series.truncate(order)


def monomial(p, order=DEFAULT_ORDER):
    "f(z) = z**p as a series; the extremal member of every class."
    return GeneralSeries(TruncatedSeries.monomial(p, 1, order), p, 1)


def make_function(kind, **params):
    """
    Builds a validated FunctionSpec of the given variant.

        >>> make_function('series', p=2, coeffs=[2, 0, 1])
        Traceback (most recent call last):
        ...
        multivalent.errors.InvalidNormalization: leading coefficient must be 1, got (2+0j)
    """
    if kind == 'monomial':
        return monomial(_positive_int('p', params.get('p', 1)),
                        params.get('order', DEFAULT_ORDER))
    if kind == 'series' and 'coeffs' in params:
        p = params.pop('p', 1)
        order = params.pop('order', None)
        coeffs = params.pop('coeffs')
        if order is None:
            order = max(p + len(coeffs), DEFAULT_ORDER)
        params['series'] = TruncatedSeries(coeffs, p, order)
        params['p'] = p
    try:
        factory = FunctionSpec._variants[kind]
    except KeyError:
        raise InvalidParameter('unknown function kind "%s", expected one of: %s'
                               % (kind, ', '.join(['monomial'] + FunctionSpec.variants())))
    try:
        return factory(**params)
    except TypeError as e:
        raise InvalidParameter('bad parameters for %s: %s' % (kind, e))


@inside_disk
def eval_jet(f, z):
    "(f(z), f'(z), f''(z)) at a point of the open unit disk."
    jet = f.jet(z)
    if numpy.ndim(z) == 0:
        return Jet2(*[complex(v) for v in jet])
    return jet


def to_series(f, order=DEFAULT_ORDER):
    "Truncated expansion of f up to O(z**order)."
    if order <= f.p:
        raise InvalidParameter('truncation order must exceed p=%d, got %d' % (f.p, order))
    return f.to_series(order)


def parse_complex(text):
    """
    Parses a complex literal written with ``i`` or ``j``.

        >>> parse_complex('0.1+0.05i')
        (0.1+0.05j)
        >>> parse_complex('-0.3')
        (-0.3+0j)
    """
    cleaned = text.strip().replace(' ', '').replace('i', 'j')
    try:
        return complex(cleaned)
    except ValueError:
        raise InvalidParameter('not a complex number: "%s"' % text)


_ASSIGNMENT = re.compile(r'(\w+)=(\[[^\]]*\]|[^,]+)')


def parse_function(text):
    """
    Parses the function mini-grammar::

        monomial:p=2
        monomial_plus:p=2,n=1,a=0.1+0.05i
        exp_monomial:p=1,a=-0.3
        series:p=2,n=2,coeffs=[1,0,0.1]

    Series coefficients start at ``z**p``.
    """
    kind, _, body = text.partition(':')
    kind = kind.strip()
    params = {}
    for name, value in _ASSIGNMENT.findall(body):
        if name in ('p', 'n', 'order'):
            try:
                params[name] = int(value)
            except ValueError:
                raise InvalidParameter('%s must be an integer, got "%s"' % (name, value))
        elif name == 'coeffs':
            items = [v for v in value.strip('[]').split(',') if v.strip()]
            params[name] = [parse_complex(v) for v in items]
        else:
            params[name] = parse_complex(value)
    return make_function(kind, **params)
