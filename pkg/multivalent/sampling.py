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

" Polar grids on the open unit disk. "

import numpy

from .decorators import cached_property
from .errors import InvalidParameter
from .settings import DEFAULT_ANGLES, DEFAULT_RADII, ORIGIN_EPSILON, ZERO_EPSILON


class SamplingPlan(object):
    """
    Rings of equally spaced points. ``points`` has one row per radius and one
    column per angle, the first angle being 0; reductions over the grid break
    ties in this (ring, angle) order.

        >>> plan = SamplingPlan(radii=(0.5, 0.9), angles_per_ring=16)
        >>> plan.points.shape
        (2, 16)
        >>> plan.size
        32
    """

    def __init__(self, radii=DEFAULT_RADII, angles_per_ring=DEFAULT_ANGLES,
                 origin_epsilon=ORIGIN_EPSILON, denominator_epsilon=ZERO_EPSILON):
        radii = tuple(float(r) for r in radii)
        if not radii:
            raise InvalidParameter('a plan needs at least one radius')
        if any(not 0 < r < 1 for r in radii):
            raise InvalidParameter('radii must lie in (0,1), got %r' % (radii,))
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise InvalidParameter('radii must be strictly increasing, got %r' % (radii,))
        if int(angles_per_ring) != angles_per_ring or angles_per_ring < 16:
            raise InvalidParameter('angles_per_ring must be an integer >= 16, got %r'
                                   % angles_per_ring)
        for name, eps in (('origin_epsilon', origin_epsilon),
                          ('denominator_epsilon', denominator_epsilon)):
            if not 0 < eps <= 1e-3:
                raise InvalidParameter('%s must lie in (0, 1e-3], got %r' % (name, eps))
        self.radii = radii
        self.angles_per_ring = int(angles_per_ring)
        self.origin_epsilon = float(origin_epsilon)
        self.denominator_epsilon = float(denominator_epsilon)

    @classmethod
    def default(cls):
        return cls()

    def __repr__(self):
        return '<SamplingPlan %d rings x %d angles, r <= %g>' % (
            len(self.radii), self.angles_per_ring, self.radii[-1])

    @property
    def size(self):
        return len(self.radii) * self.angles_per_ring

    @cached_property
    def points(self):
        "Complex grid of shape (rings, angles)."
        theta = 2 * numpy.pi * numpy.arange(self.angles_per_ring) / self.angles_per_ring
        grid = numpy.outer(numpy.array(self.radii), numpy.exp(1j * theta))
        grid.setflags(write=False)
        return grid

    def replace(self, **kw):
        values = self.to_dict()
        values.update(kw)
        return SamplingPlan(**values)

    def refined(self, factor=2):
        "The same rings with ``factor`` times as many angles."
        return self.replace(angles_per_ring=self.angles_per_ring * factor)

    def to_dict(self):
        return dict(radii=self.radii, angles_per_ring=self.angles_per_ring,
                    origin_epsilon=self.origin_epsilon,
                    denominator_epsilon=self.denominator_epsilon)


def worst_points(values, points, count):
    """
    The ``count`` grid points with the smallest unmasked values, as
    (z, value) pairs. Ties keep the (ring, angle) order.
    """
    values = numpy.ma.asarray(values).ravel()
    points = numpy.asarray(points).ravel()
    keep = numpy.flatnonzero(~numpy.ma.getmaskarray(values))
    data = values.data[keep]
    order = numpy.argsort(data, kind='stable')[:count]
    return [(complex(points[keep[i]]), float(data[i])) for i in order]
