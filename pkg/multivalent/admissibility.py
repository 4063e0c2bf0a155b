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
Scans of the admissibility conditions behind the two theorems.

For the first theorem ``psi(r, s) = p(mu+eta) + s/(r + C)`` must stay outside
the half-plane ``Re w < p(mu+eta) + nM/(M+C)`` at r = M e^(i theta),
s = K e^(i theta), K >= nM. For the second,
``psi(r, s) = p(mu+eta) + (C-delta) s/((C-delta) r + delta)`` must stay
outside ``Re w > k`` at r = ix, s = y <= -n(1+x^2)/2.

    >>> from multivalent.operators import OperatorParams
    >>> spec = PsiSpec('thm1', OperatorParams(p=1, mu=1, eta=1), M=2.0)
    >>> result = scan_lemma1(spec)
    >>> result.certified, result.argmin
    (True, (0.0, 2.0))
"""

import numpy

from .errors import InvalidDelta, InvalidParameter
from .operators import capacity_C
from .settings import (K_MULTIPLIERS, SCAN_TOLERANCE, THETA_COUNT, X_SAMPLES,
                       Y_MULTIPLIERS, ZERO_EPSILON)
from .thresholds import k_value


class PsiSpec(object):
    "One of the two psi functions, with M (first theorem) or delta (second)."

    def __init__(self, which, params, M=None, delta=None):
        if which not in ('thm1', 'thm2'):
            raise InvalidParameter('which must be "thm1" or "thm2", got %r' % which)
        self.which = which
        self.params = params
        self.C = capacity_C(params)
        if which == 'thm1':
            if M is None or M < self.C:
                raise InvalidParameter('M must be at least C = %.17g, got %r' % (self.C, M))
        else:
            if delta is None or not 0 <= delta < self.C:
                raise InvalidDelta('delta must lie in [0, C) with C = %.17g, got %r'
                                   % (self.C, delta))
        self.M = M
        self.delta = delta

    def __repr__(self):
        role = 'M=%g' % self.M if self.which == 'thm1' else 'delta=%g' % self.delta
        return '<PsiSpec %s %r %s>' % (self.which, self.params, role)

    def psi(self, r, s):
        w = self.params.weight
        if self.which == 'thm1':
            return w + s / (r + self.C)
        d = self.C - self.delta
        return w + d * s / (d * r + self.delta)

    def denominator(self, r):
        if self.which == 'thm1':
            return r + self.C
        return (self.C - self.delta) * r + self.delta

    @property
    def bound(self):
        "The half-plane edge: p(mu+eta) + nM/(M+C), or k."
        p = self.params
        if self.which == 'thm1':
            return p.weight + p.n * self.M / (self.M + self.C)
        return k_value(p.mu, p.eta, p.lam, self.delta, p.p, p.n)


class ScanGrid(object):
    "Sample sets of the two scans."

    def __init__(self, theta_count=THETA_COUNT, K_multipliers=K_MULTIPLIERS,
                 x_samples=X_SAMPLES, y_multipliers=Y_MULTIPLIERS):
        if theta_count < 64:
            raise InvalidParameter('theta_count must be at least 64, got %r' % theta_count)
        if min(K_multipliers) < 1 or min(y_multipliers) < 1:
            raise InvalidParameter('multipliers must be at least 1')
        self.theta_count = int(theta_count)
        self.K_multipliers = tuple(float(k) for k in K_multipliers)
        self.x_samples = tuple(float(x) for x in x_samples)
        self.y_multipliers = tuple(float(y) for y in y_multipliers)

    def __repr__(self):
        return '<ScanGrid %d thetas x %d K, %d x x %d y>' % (
            self.theta_count, len(self.K_multipliers),
            len(self.x_samples), len(self.y_multipliers))


class ScanResult(object):
    """
    Extreme value of Re psi over a scan grid. ``where`` holds (theta, K) for
    the first theorem and (x, y) for the second; ``rows`` is the scan table
    (the two coordinates, the value and the margin).
    """

    def __init__(self, spec, value, where, excluded, columns, rows):
        self.spec = spec
        self.value = value
        self.where = where
        self.excluded = excluded
        self.columns = columns
        self.rows = rows
        self.bound = spec.bound
        if spec.which == 'thm1':
            self.margin = value - self.bound
        else:
            self.margin = self.bound - value
        self.certified = bool(self.margin >= -SCAN_TOLERANCE)

    def __repr__(self):
        return '<ScanResult %s value=%.17g bound=%.17g certified=%s>' % (
            self.spec.which, self.value, self.bound, self.certified)

    min_value = max_value = property(lambda self: self.value)
    argmin = argmax = property(lambda self: self.where)


def _extreme(values, excluded, coords, pick):
    data = numpy.where(excluded, numpy.nan, values)
    i = int(pick(data))
    return float(data.flat[i]), tuple(float(c.flat[i]) for c in coords)


def scan_lemma1(spec, grid=None, eps_zero=ZERO_EPSILON):
    """
    Minimum of Re psi(M e^(i theta), K e^(i theta)) over theta and K = m nM.
    The point theta = pi is excluded when M = C, where the denominator
    vanishes.
    """
    if spec.which != 'thm1':
        raise InvalidParameter('scan_lemma1 needs a thm1 spec')
    grid = grid or ScanGrid()
    n = spec.params.n
    theta = 2 * numpy.pi * numpy.arange(grid.theta_count) / grid.theta_count
    K = numpy.array(grid.K_multipliers) * n * spec.M
    T, KK = numpy.meshgrid(theta, K, indexing='ij')
    unit = numpy.exp(1j * T)
    r = spec.M * unit
    excluded = numpy.abs(spec.denominator(r)) < eps_zero
    with numpy.errstate(all='ignore'):
        values = spec.psi(r, KK * unit).real
    value, where = _extreme(values, excluded, (T, KK), numpy.nanargmin)
    rows = [(t, k, v, v - spec.bound)
            for t, k, v, x in zip(T.flat, KK.flat, values.flat, excluded.flat) if not x]
    return ScanResult(spec, value, where, int(excluded.sum()), ('theta', 'K', 'value', 'margin'), rows)


def scan_lemma2(spec, grid=None, eps_zero=ZERO_EPSILON):
    """
    Maximum of Re psi(ix, y) over the x samples and y = -m n(1+x^2)/2. With
    delta = 0 the denominator vanishes at x = 0, which is then excluded.
    """
    if spec.which != 'thm2':
        raise InvalidParameter('scan_lemma2 needs a thm2 spec')
    grid = grid or ScanGrid()
    n = spec.params.n
    x = numpy.array(grid.x_samples)
    m = numpy.array(grid.y_multipliers)
    X, MM = numpy.meshgrid(x, m, indexing='ij')
    Y = -MM * n * (1 + X ** 2) / 2
    r = 1j * X
    excluded = numpy.abs(spec.denominator(r)) < eps_zero
    with numpy.errstate(all='ignore'):
        values = spec.psi(r, Y).real
    value, where = _extreme(values, excluded, (X, Y), numpy.nanargmax)
    rows = [(a, b, v, spec.bound - v)
            for a, b, v, e in zip(X.flat, Y.flat, values.flat, excluded.flat) if not e]
    return ScanResult(spec, value, where, int(excluded.sum()), ('x', 'y', 'value', 'margin'), rows)
