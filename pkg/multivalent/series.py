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
Truncated power series with complex coefficients.

A series stores the coefficients of ``z**low_exp, ..., z**(order-1)``; the
terms from ``z**order`` on are unknown. Every operation propagates the
truncation order honestly, so a result never claims more coefficients than
its inputs determine.

    >>> z = TruncatedSeries.monomial(1, order=4)
    >>> (1 + z) * (1 - z)
    <TruncatedSeries 1 - z^2 + O(z^4)>
    >>> series_log(1 + z)
    <TruncatedSeries z - 0.5z^2 + 0.333333z^3 + O(z^4)>

Quotient, logarithm and exponential use the triangular recurrences, one
coefficient at a time.
"""

import cmath

import numpy

from .errors import DivisionByZeroSeries, InvalidLogArgument, InvalidParameter
from .settings import COEFF_EPSILON, DEFAULT_ORDER


class TruncatedSeries(object):
    """
    Laurent-style truncated series ``sum(coeffs[i] * z**(low_exp+i)) + O(z**order)``.

    Leading zero coefficients are trimmed on construction, so ``low_exp`` is
    the exponent of the first nonzero coefficient. The zero series has no
    coefficients and ``low_exp == order``. Coefficients missing between the
    given ones and ``order`` are known zeros.
    """

    def __init__(self, coeffs=(), low_exp=0, order=None):
        coeffs = numpy.array(coeffs, dtype=complex).ravel()
        low_exp = int(low_exp)
        if order is None:
            order = low_exp + len(coeffs)
        order = int(order)
        length = order - low_exp
        if length <= 0:
            coeffs = numpy.zeros(0, dtype=complex)
        elif len(coeffs) > length:
            coeffs = coeffs[:length]
        elif len(coeffs) < length:
            coeffs = numpy.concatenate([coeffs, numpy.zeros(length - len(coeffs), dtype=complex)])
        nonzero = numpy.flatnonzero(coeffs)
        if len(nonzero):
            coeffs = coeffs[nonzero[0]:].copy()
            low_exp += int(nonzero[0])
        else:
            coeffs = numpy.zeros(0, dtype=complex)
            low_exp = order
        coeffs.setflags(write=False)
        self.coeffs = coeffs
        self.low_exp = low_exp
        self.order = order

    @classmethod
    def zero(cls, order=DEFAULT_ORDER):
        return cls((), order, order)

    @classmethod
    def constant(cls, value, order=DEFAULT_ORDER):
        return cls([value], 0, order)

    @classmethod
    def monomial(cls, exponent, coeff=1, order=DEFAULT_ORDER):
        return cls([coeff], exponent, order)

    @classmethod
    def from_terms(cls, terms, order=DEFAULT_ORDER):
        "Builds a series from a mapping {exponent: coefficient}."
        if not terms:
            return cls.zero(order)
        low = min(terms)
        coeffs = numpy.zeros(max(order - low, 0), dtype=complex)
        for exponent, value in terms.items():
            if exponent < order:
                coeffs[exponent - low] += value
        return cls(coeffs, low, order)

    @property
    def is_zero(self):
        return not len(self.coeffs)

    def coefficient(self, exponent):
        "Returns the coefficient of z**exponent."
        if exponent >= self.order:
            raise IndexError('coefficient of z^%d is beyond O(z^%d)' % (exponent, self.order))
        if exponent < self.low_exp:
            return 0j
        return complex(self.coeffs[exponent - self.low_exp])

    def dense(self, lo, hi):
        "Coefficients of z**lo ... z**(hi-1) as an array, zeros below low_exp."
        out = numpy.zeros(max(hi - lo, 0), dtype=complex)
        start = max(self.low_exp, lo)
        stop = min(self.order, hi)
        if start < stop:
            out[start - lo:stop - lo] = self.coeffs[start - self.low_exp:stop - self.low_exp]
        return out

    def shift(self, k):
        "Multiplies by z**k."
        return TruncatedSeries(self.coeffs, self.low_exp + k, self.order + k)

    def truncate(self, order):
        return TruncatedSeries(self.coeffs, self.low_exp, min(order, self.order))

    def scale(self, factor):
        return TruncatedSeries(self.coeffs * factor, self.low_exp, self.order)

    def __call__(self, z):
        """Evaluates the stored terms at ``z`` (scalar or array) by Horner's
        rule. The unknown tail is ignored, see ``tail_bound``.
        """
        z = numpy.asarray(z, dtype=complex)
        if self.is_zero:
            return numpy.zeros_like(z)[()]
        value = numpy.polyval(self.coeffs[::-1], z)
        if self.low_exp:
            value = value * z ** self.low_exp
        return value[()]

    def tail_bound(self, r):
        """Rough bound on the omitted tail at ``|z| = r``, from a root test on
        the last stored coefficients. Returns ``inf`` when the estimated
        radius of convergence does not exceed ``r``.
        """
        if self.is_zero:
            return 0.0
        exps = numpy.arange(self.low_exp, self.order)
        count = max(len(exps) // 4, 1)
        exps, coeffs = exps[-count:], numpy.abs(self.coeffs[-count:])
        usable = (exps > 0) & (coeffs > 0)
        if not usable.any():
            return 0.0
        q = numpy.max(coeffs[usable] ** (1.0 / exps[usable]))
        if q * r >= 1:
            return numpy.inf
        return float((q * r) ** self.order / (1 - q * r))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            k = self.low_exp + i
            if c.imag == 0:
                text = '%g' % c.real
            else:
                text = '(%g%+gj)' % (c.real, c.imag)
            if k == 0:
                terms.append(text)
            else:
                power = 'z' if k == 1 else 'z^%d' % k
                if text == '1':
                    text = ''
                elif text == '-1':
                    text = '-'
                terms.append(text + power)
        body = ' + '.join(terms).replace('+ -', '- ') if terms else '0'
        return '<TruncatedSeries %s + O(z^%d)>' % (body, self.order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.low_exp == other.low_exp and self.order == other.order
                and numpy.array_equal(self.coeffs, other.coeffs))

    __hash__ = None

    def allclose(self, other, tol=1e-12):
        "Coefficientwise comparison up to the common truncation order."
        order = min(self.order, other.order)
        lo = min(self.low_exp, other.low_exp, order)
        diff = self.dense(lo, order) - other.dense(lo, order)
        return bool(numpy.all(numpy.abs(diff) <= tol))

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        if numpy.isscalar(other):
            return TruncatedSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return series_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return series_add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return series_add(other, -self)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        if numpy.isscalar(other):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_div(self, other)
        if numpy.isscalar(other):
            return self.scale(1.0 / other)
        return NotImplemented

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return series_div(other, self)

    def __pow__(self, exponent):
        if isinstance(exponent, (int, numpy.integer)) and exponent >= 0:
            result = TruncatedSeries.constant(1, self.order - self.low_exp)
            base = self
            while exponent:
                if exponent & 1:
                    result = series_mul(result, base)
                base = series_mul(base, base)
                exponent >>= 1
            return result
        return series_pow(self, exponent)


def series_add(a, b):
    "Coefficientwise sum, truncated to the smaller order."
    order = min(a.order, b.order)
    low = min(a.low_exp, b.low_exp)
    if low >= order:
        return TruncatedSeries.zero(order)
    return TruncatedSeries(a.dense(low, order) + b.dense(low, order), low, order)


def series_mul(a, b):
    """Cauchy product. The result is valid up to
    ``min(a.low_exp + b.order, b.low_exp + a.order)``.
    """
    order = min(a.low_exp + b.order, b.low_exp + a.order)
    low = a.low_exp + b.low_exp
    if a.is_zero or b.is_zero or low >= order:
        return TruncatedSeries.zero(order)
    product = numpy.convolve(a.coeffs, b.coeffs)[:order - low]
    return TruncatedSeries(product, low, order)


def series_div(a, b):
    """Laurent quotient ``a / b``. The unit part of ``b`` is inverted by the
    usual recurrence; exponents subtract.

        >>> one = TruncatedSeries.constant(1, order=4)
        >>> one / (1 - TruncatedSeries.monomial(1, order=4))
        <TruncatedSeries 1 + z + z^2 + z^3 + O(z^4)>
    """
    if b.is_zero:
        raise DivisionByZeroSeries('division by the zero series')
    low = a.low_exp - b.low_exp
    if a.is_zero:
        return TruncatedSeries.zero(a.order - b.low_exp)
    length = min(len(a.coeffs), len(b.coeffs))
    u, v = b.coeffs[:length], a.coeffs[:length]
    q = numpy.zeros(length, dtype=complex)
    for k in range(length):
        q[k] = (v[k] - numpy.dot(u[1:k + 1], q[:k][::-1])) / u[0]
    return TruncatedSeries(q, low, low + length)


def series_deriv(a):
    "Termwise derivative."
    if a.is_zero:
        return TruncatedSeries.zero(a.order - 1)
    exponents = numpy.arange(a.low_exp, a.order)
    return TruncatedSeries(a.coeffs * exponents, a.low_exp - 1, a.order - 1)


def series_log(a):
    """Logarithm of a series with a nonzero constant term. The constant
    term of the result is the principal logarithm of ``a(0)``.
    """
    if a.is_zero or a.low_exp != 0:
        raise InvalidLogArgument('log needs a nonzero constant term, got %r' % a)
    c0 = a.coeffs[0]
    w = a.coeffs / c0
    count = len(w)
    out = numpy.zeros(count, dtype=complex)
    out[0] = cmath.log(c0)
    for k in range(1, count):
        j = numpy.arange(1, k)
        out[k] = w[k] - numpy.dot(j * out[1:k], w[k - 1:0:-1]) / k
    return TruncatedSeries(out, 0, a.order)


def series_exp(a):
    "Exponential of a series without negative powers."
    if a.low_exp < 0:
        raise InvalidParameter('exp needs a series without negative powers, got %r' % a)
    order = a.order
    if order <= 0:
        return TruncatedSeries.zero(order)
    b = a.dense(0, order)
    out = numpy.zeros(order, dtype=complex)
    out[0] = cmath.exp(b[0])
    for k in range(1, order):
        j = numpy.arange(1, k + 1)
        out[k] = numpy.dot(j * b[1:k + 1], out[:k][::-1]) / k
    return TruncatedSeries(out, 0, order)


def series_pow(a, mu):
    """Principal power ``a**mu`` as ``exp(mu * log(a))``; the branch is
    fixed by the principal logarithm of the constant term.
    """
    return series_exp(series_log(a).scale(mu))


def order_of_vanishing(a, c=0, eps=COEFF_EPSILON):
    """Smallest exponent m whose coefficient in ``a - c`` exceeds ``eps`` in
    modulus; ``a.order`` when every stored coefficient vanishes.

        >>> z = TruncatedSeries.monomial(1, order=8)
        >>> order_of_vanishing(z**3 + z**5)
        3
        >>> order_of_vanishing(1 + z**2, 1)
        2
    """
    d = a - c if c else a
    for i, value in enumerate(d.coeffs):
        if abs(value) > eps:
            return d.low_exp + i
    return a.order
