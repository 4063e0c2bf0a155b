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
The operators built on a function f of A(p,n):

* ``F = (1-lam) f + lam z f'``
* ``J = mu zF'/F + eta (1 + zF''/F')``
* ``P = (F/z^p)^mu (F'/z^(p-1))^eta`` on the branch that is continuous along
  radii and positive at the origin, where it equals ``capacity_C``
* the auxiliary functions h of the two theorems and the identities linking
  them to J.

Scalar evaluators raise on degenerate points; the ``*_on_grid`` evaluators
return masked arrays instead, masking the points they could not evaluate.

    >>> from multivalent.functions import monomial
    >>> params = OperatorParams(p=2, lam=0.5, mu=1, eta=1)
    >>> capacity_C(params)
    4.5
    >>> abs(eval_J(monomial(2), params, 0.3+0.2j) - 4) < 1e-12
    True
"""

import logging
from collections import namedtuple

import numpy

from .decorators import inside_disk
from .errors import BranchAmbiguity, InvalidDelta, InvalidParameter, NearZeroDenominator
from .series import TruncatedSeries, series_deriv, series_pow
from .settings import (BRANCH_MAX_STEPS, BRANCH_STEPS, CONTOUR_NODES,
                       CONTOUR_RADIUS, DEFAULT_ORDER, ORIGIN_EPSILON,
                       ZERO_EPSILON)


logger = logging.getLogger(__name__)

FJet = namedtuple('FJet', 'F F1 F2')


class OperatorParams(object):
    """
    The parameter bundle ``(p, n, lam, mu, eta)`` of the operators. ``lam``
    must lie in [0,1]; ``p`` and ``n`` are positive integers.
    """
    __slots__ = ('p', 'n', 'lam', 'mu', 'eta')

    def __init__(self, p=1, n=1, lam=0.0, mu=1.0, eta=0.0):
        if int(p) != p or p < 1:
            raise InvalidParameter('p must be a positive integer, got %r' % p)
        if int(n) != n or n < 1:
            raise InvalidParameter('n must be a positive integer, got %r' % n)
        if not 0 <= lam <= 1:
            raise InvalidParameter('lambda must lie in [0,1], got %r' % lam)
        self.p = int(p)
        self.n = int(n)
        self.lam = float(lam)
        self.mu = float(mu)
        self.eta = float(eta)

    def __repr__(self):
        return '<OperatorParams p=%d n=%d lambda=%g mu=%g eta=%g>' % (
            self.p, self.n, self.lam, self.mu, self.eta)

    def __eq__(self, other):
        if not isinstance(other, OperatorParams):
            return NotImplemented
        return self.to_tuple() == other.to_tuple()

    def __hash__(self):
        return hash(self.to_tuple())

    def to_tuple(self):
        return (self.p, self.n, self.lam, self.mu, self.eta)

    def to_dict(self):
        return dict(p=self.p, n=self.n, lam=self.lam, mu=self.mu, eta=self.eta)

    def replace(self, **kw):
        values = self.to_dict()
        values.update(kw)
        return OperatorParams(**values)

    @property
    def weight(self):
        "p(mu+eta), the value of J for a monomial."
        return self.p * (self.mu + self.eta)

    @property
    def origin_scale(self):
        "1 + lam(p-1), the value of F/z^p at the origin."
        return 1 + self.lam * (self.p - 1)


def capacity_C(params):
    """p^eta (1+lam(p-1))^(eta+mu), the origin value of P."""
    return params.p ** params.eta * params.origin_scale ** (params.eta + params.mu)


def _zpow(z, exponent):
    if exponent == 0:
        return numpy.ones_like(z)
    return z ** exponent


def _F_jet(f, params, z, count=2):
    d = f.derivatives(z, count + 1)
    lam = params.lam
    out = [(1 - lam) * d[0] + lam * z * d[1],
           d[1] + lam * z * d[2]]
    if count >= 2:
        out.append((1 + lam) * d[2] + lam * z * d[3])
    return out


def _bases(f, params, z, eps_origin=ORIGIN_EPSILON):
    "F/z^p and F'/z^(p-1), replaced by their origin values near 0."
    z = numpy.asarray(z, dtype=complex)
    F, F1 = _F_jet(f, params, z, 1)
    with numpy.errstate(all='ignore'):
        G1 = F / _zpow(z, params.p)
        G2 = F1 / _zpow(z, params.p - 1)
    origin = numpy.abs(z) < eps_origin
    c = params.origin_scale
    G1 = numpy.where(origin, c, G1)
    G2 = numpy.where(origin, params.p * c, G2)
    return G1, G2


@inside_disk
def eval_F(f, params, z):
    "Values of F, F' and F'' at ``z``."
    z = numpy.asarray(z, dtype=complex)
    jet = _F_jet(f, params, z, 2)
    if jet[0].ndim == 0:
        return FJet(*[complex(v) for v in jet])
    return FJet(*jet)


@inside_disk
def eval_J(f, params, z, eps_zero=ZERO_EPSILON, eps_origin=ORIGIN_EPSILON):
    """
    The operator J at one point. Points closer to the origin than
    ``eps_origin`` get the limit value ``p(mu+eta)``.
    """
    z = complex(z)
    if abs(z) < eps_origin:
        return complex(params.weight)
    F, F1, F2 = [complex(v) for v in _F_jet(f, params, numpy.asarray(z), 2)]
    G1 = F / z ** params.p
    G2 = F1 / z ** (params.p - 1)
    if abs(G1) <= eps_zero:
        raise NearZeroDenominator('F', abs(G1), z)
    if abs(G2) <= eps_zero:
        raise NearZeroDenominator("F'", abs(G2), z)
    return params.mu * G2 / G1 + params.eta * (1 + z * F2 / F1)


def J_on_grid(f, params, z, eps_zero=ZERO_EPSILON, eps_origin=ORIGIN_EPSILON):
    "J over an array of points, masked where F or F' degenerates."
    z = numpy.asarray(z, dtype=complex)
    F, F1, F2 = _F_jet(f, params, z, 2)
    with numpy.errstate(all='ignore'):
        G1 = F / _zpow(z, params.p)
        G2 = F1 / _zpow(z, params.p - 1)
        J = params.mu * G2 / G1 + params.eta * (1 + z * F2 / F1)
    origin = numpy.abs(z) < eps_origin
    bad = ~origin & ((numpy.abs(G1) <= eps_zero) | (numpy.abs(G2) <= eps_zero)
                     | ~numpy.isfinite(J))
    J = numpy.where(origin, params.weight, J)
    J = numpy.where(bad, 0, J)
    return numpy.ma.masked_array(J, mask=bad)


def side_moduli(f, params, z, eps_origin=ORIGIN_EPSILON):
    """min(|F/z^p|, |F'/z^(p-1)|) over an array of points; the side
    condition F F' != 0 holds where this stays away from zero.
    """
    G1, G2 = _bases(f, params, z, eps_origin)
    with numpy.errstate(invalid='ignore'):
        return numpy.nan_to_num(numpy.minimum(numpy.abs(G1), numpy.abs(G2)), nan=0.0)


class RadialLogs(object):
    """
    Logarithms of both bases at the endpoints of the radii ``[0, z]``,
    continued from the positive origin values.

    ``degenerate`` marks points whose path passes within ``eps`` of a zero of
    a base, ``unresolved`` points where even the finest subdivision left an
    argument step above pi/2, ``crossed`` points where the continued argument
    of a base with a nonzero exponent has left (-pi, pi], so that the
    continued power differs from the pointwise principal one.
    """

    def __init__(self, log1, log2, degenerate, unresolved, crossed):
        self.log1 = log1
        self.log2 = log2
        self.degenerate = degenerate
        self.unresolved = unresolved
        self.crossed = crossed

    @property
    def bad(self):
        return self.degenerate | self.unresolved


def radial_logs(f, params, z, eps_zero=ZERO_EPSILON, eps_origin=ORIGIN_EPSILON,
                steps=BRANCH_STEPS, max_steps=BRANCH_MAX_STEPS):
    """
    Tracks the arguments of F/z^p and F'/z^(p-1) along each radius from 0 to
    ``z``. A radius is subdivided in ``steps`` pieces; while some argument
    increment exceeds pi/2 the subdivision of that radius is doubled, up to
    ``max_steps``.
    """
    z = numpy.asarray(z, dtype=complex)
    shape = z.shape
    flat = z.ravel()
    size = flat.size
    log1 = numpy.zeros(size, dtype=complex)
    log2 = numpy.zeros(size, dtype=complex)
    degenerate = numpy.zeros(size, dtype=bool)
    unresolved = numpy.zeros(size, dtype=bool)
    c = params.origin_scale
    origin = numpy.array([c, params.p * c], dtype=complex)

    pending = numpy.arange(size)
    while pending.size:
        t = numpy.linspace(0.0, 1.0, steps + 1)[1:]
        w = numpy.outer(t, flat[pending])
        G1, G2 = _bases(f, params, w, eps_origin)
        G1 = numpy.vstack([numpy.full((1, pending.size), origin[0]), G1])
        G2 = numpy.vstack([numpy.full((1, pending.size), origin[1]), G2])
        with numpy.errstate(all='ignore'):
            d1 = numpy.angle(G1[1:] / G1[:-1])
            d2 = numpy.angle(G2[1:] / G2[:-1])
        tiny = ((numpy.abs(G1) <= eps_zero) | (numpy.abs(G2) <= eps_zero)
                | ~numpy.isfinite(G1) | ~numpy.isfinite(G2)).any(axis=0)
        jumpy = ((numpy.abs(d1) > numpy.pi / 2) | (numpy.abs(d2) > numpy.pi / 2)).any(axis=0)
        last = steps * 2 > max_steps
        done = tiny | ~jumpy | last
        idx = pending[done]
        with numpy.errstate(all='ignore'):
            log1[idx] = numpy.log(numpy.abs(G1[-1, done])) + 1j * d1[:, done].sum(axis=0)
            log2[idx] = numpy.log(numpy.abs(G2[-1, done])) + 1j * d2[:, done].sum(axis=0)
        degenerate[idx] = tiny[done]
        unresolved[idx] = (jumpy & ~tiny)[done]
        if (~done).any():
            logger.debug('refining %d radii to %d steps', (~done).sum(), steps * 2)
        pending = pending[~done]
        steps *= 2

    bad = degenerate | unresolved
    log1[bad] = 0
    log2[bad] = 0
    crossed = numpy.zeros(size, dtype=bool)
    if params.mu:
        crossed |= numpy.abs(log1.imag) > numpy.pi
    if params.eta:
        crossed |= numpy.abs(log2.imag) > numpy.pi
    crossed &= ~bad
    if crossed.any():
        logger.debug('%d points leave the principal branch', crossed.sum())
    return RadialLogs(log1.reshape(shape), log2.reshape(shape), degenerate.reshape(shape),
                      unresolved.reshape(shape), crossed.reshape(shape))


def P_on_grid(f, params, z, eps_zero=ZERO_EPSILON, eps_origin=ORIGIN_EPSILON):
    """
    P over an array of points on the origin-rooted branch. Returns the
    masked values and the boolean array of branch crossings.
    """
    logs = radial_logs(f, params, z, eps_zero, eps_origin)
    values = numpy.exp(params.mu * logs.log1 + params.eta * logs.log2)
    values = numpy.where(logs.bad, 0, values)
    return numpy.ma.masked_array(values, mask=logs.bad), logs.crossed


@inside_disk
def eval_P(f, params, z, strict=True, eps_zero=ZERO_EPSILON, eps_origin=ORIGIN_EPSILON):
    """
    P at one point. With ``strict`` a point where the continued branch no
    longer agrees with the principal one raises BranchAmbiguity.

        >>> from multivalent.functions import make_function
        >>> f = make_function('monomial_plus', p=1, n=1, a=0.1)
        >>> params = OperatorParams(p=1, mu=1, eta=1)
        >>> round(eval_P(f, params, 0.3).real, 12)
        1.0918
    """
    z = complex(z)
    if abs(z) < eps_origin:
        return complex(capacity_C(params))
    G1, G2 = [complex(g) for g in _bases(f, params, z, eps_origin)]
    if abs(G1) <= eps_zero:
        raise NearZeroDenominator('F', abs(G1), z)
    if abs(G2) <= eps_zero:
        raise NearZeroDenominator("F'", abs(G2), z)
    logs = radial_logs(f, params, numpy.array([z]), eps_zero, eps_origin)
    if logs.degenerate[0]:
        raise BranchAmbiguity(z, 'a base vanishes on the radius [0, z]')
    if logs.unresolved[0]:
        raise BranchAmbiguity(z, 'argument not resolved with %d radial steps' % BRANCH_MAX_STEPS)
    if strict and logs.crossed[0]:
        raise BranchAmbiguity(z, 'a base crosses the negative real axis on [0, z]')
    return complex(numpy.exp(params.mu * logs.log1[0] + params.eta * logs.log2[0]))


def principal_P(f, params, z, eps_origin=ORIGIN_EPSILON):
    "P with pointwise principal powers, no continuation."
    G1, G2 = _bases(f, params, z, eps_origin)
    with numpy.errstate(all='ignore'):
        return (G1 ** params.mu) * (G2 ** params.eta)


def P_series(f, params, order=DEFAULT_ORDER):
    """
    Truncated expansion of P around the origin, the powers taken with the
    principal logarithm of the positive constant terms.
    """
    p, lam = params.p, params.lam
    s = f.to_series(order + p)
    s1 = series_deriv(s)
    F = s * (1 - lam) + s1.shift(1) * lam
    F1 = series_deriv(F)
    G1 = F.shift(-p)
    G2 = F1.shift(-(p - 1))
    if params.mu:
        result = series_pow(G1, params.mu)
    else:
        result = TruncatedSeries.constant(1, G1.order)
    if params.eta:
        result = result * series_pow(G2, params.eta)
    return result.truncate(order)


def eval_P_series(f, params, z, order=DEFAULT_ORDER):
    return P_series(f, params, order)(z)


def _check_delta(params, delta):
    C = capacity_C(params)
    if not 0 <= delta < C:
        raise InvalidDelta('delta must lie in [0, C) with C = %.17g, got %r' % (C, delta))
    return C


def eval_h_thm1(f, params, z, **kw):
    "P - C; vanishes at the origin."
    return eval_P(f, params, z, **kw) - capacity_C(params)


def eval_h_thm2(f, params, delta, z, **kw):
    "(P - delta)/(C - delta); equals 1 at the origin."
    C = _check_delta(params, delta)
    return (eval_P(f, params, z, **kw) - delta) / (C - delta)


def h_series_thm1(f, params, order=DEFAULT_ORDER):
    return P_series(f, params, order) - capacity_C(params)


def h_series_thm2(f, params, delta, order=DEFAULT_ORDER):
    C = _check_delta(params, delta)
    return (P_series(f, params, order) - delta) / (C - delta)


def contour_radius(z, radius=CONTOUR_RADIUS):
    "Radius of the circle around z used for h'(z); the circle stays inside the disk."
    return numpy.minimum(radius, (1 - numpy.abs(z)) / 4)


def _contour_derivative(func, z, radius, nodes=CONTOUR_NODES):
    """
    Derivative of an analytic ``func`` at the points ``z`` by the trapezoidal
    rule for Cauchy's integral on circles of the given radii. ``func`` maps a
    (..., nodes) array to a masked array of the same shape.
    """
    theta = 2 * numpy.pi * numpy.arange(nodes) / nodes
    unit = numpy.exp(1j * theta)
    radius = numpy.asarray(radius)[..., None]
    w = z[..., None] + radius * unit
    # a masked node spoils the whole rule
    values = numpy.ma.filled(func(w), numpy.nan)
    return (values * unit.conj()).mean(axis=-1) / radius[..., 0]


def _identity_rhs(params, z, h, dh, which, delta):
    C = capacity_C(params)
    if which == '21':
        return params.weight + z * dh / (h + C)
    return params.weight + (C - delta) * z * dh / ((C - delta) * h + delta)


def _h_from_P(params, P, which, delta):
    C = capacity_C(params)
    if which == '21':
        return P - C
    return (P - delta) / (C - delta)


def identity_residuals(f, params, z, which='21', delta=None, method='contour',
                       eps_zero=ZERO_EPSILON, eps_origin=ORIGIN_EPSILON,
                       order=DEFAULT_ORDER):
    """
    ``|J - RHS|`` over an array of points, where RHS is the right-hand side
    of the identity of theorem 1 (``which='21'``) or theorem 2
    (``which='22'``), built from h and h'. ``method`` selects how h' is
    obtained: ``'contour'`` (Cauchy integral on a small circle) or
    ``'series'`` (termwise derivative of the h-series).
    """
    if which not in ('21', '22'):
        raise InvalidParameter('unknown identity "%s"' % which)
    if which == '22':
        _check_delta(params, delta)
    z = numpy.asarray(z, dtype=complex)
    J = J_on_grid(f, params, z, eps_zero, eps_origin)
    if method == 'contour':
        P, _ = P_on_grid(f, params, z, eps_zero, eps_origin)
        h = _h_from_P(params, P, which, delta)

        def h_of(w):
            values, _ = P_on_grid(f, params, w, eps_zero, eps_origin)
            return _h_from_P(params, values, which, delta)

        dh = _contour_derivative(h_of, z, contour_radius(z))
    elif method == 'series':
        hs = (h_series_thm1(f, params, order) if which == '21'
              else h_series_thm2(f, params, delta, order))
        h = numpy.ma.masked_array(hs(z))
        dh = numpy.ma.masked_array(series_deriv(hs)(z))
    else:
        raise InvalidParameter('unknown differentiation method "%s"' % method)
    with numpy.errstate(all='ignore'):
        rhs = _identity_rhs(params, z, h, dh, which, delta)
        residual = numpy.ma.abs(J - rhs)
    origin = numpy.abs(z) < eps_origin
    residual = numpy.ma.where(origin, 0.0, residual)
    return numpy.ma.masked_invalid(residual)


def _scalar_residual(f, params, z, which, delta, method, **kw):
    z = complex(z)
    J = eval_J(f, params, z, **kw)
    if abs(z) < kw.get('eps_origin', ORIGIN_EPSILON):
        return abs(J - params.weight)
    eval_P(f, params, z, strict=False, **kw)
    residual = identity_residuals(f, params, numpy.array([z]), which, delta, method, **kw)
    if numpy.ma.is_masked(residual[0]):
        raise NearZeroDenominator('h + C', 0.0, z)
    return float(residual[0])


@inside_disk
def check_identity_21(f, params, z, method='contour', **kw):
    """
    Residual of ``J = p(mu+eta) + z h'/(h + C)`` with ``h = P - C``.

        >>> from multivalent.functions import make_function
        >>> f = make_function('monomial_plus', p=1, n=1, a=0.1)
        >>> check_identity_21(f, OperatorParams(mu=1, eta=1), 0.5j) < 1e-8
        True
    """
    return _scalar_residual(f, params, z, '21', None, method, **kw)


@inside_disk
def check_identity_22(f, params, delta, z, method='contour', **kw):
    "Residual of ``J = p(mu+eta) + (C-delta) z h'/((C-delta) h + delta)``."
    _check_delta(params, delta)
    return _scalar_residual(f, params, z, '22', delta, method, **kw)
