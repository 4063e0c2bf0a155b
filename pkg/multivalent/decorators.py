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

import functools

import numpy

from .errors import InvalidParameter

_missing = object()


def inside_disk(func):
    """
    Decorator for pointwise evaluators that take the evaluation point as the
    keyword ``z`` or as their last positional argument. Rejects points that
    are not in the open unit disk before the evaluator runs.

    Usage::

        >>> @inside_disk
        ... def twice(f, z):
        ...     return 2 * z
        ...
        >>> twice(None, 0.25j)
        0.5j
        >>> twice(None, 1.5)
        Traceback (most recent call last):
        ...
        multivalent.errors.InvalidParameter: twice() needs |z| < 1, got |z| = 1.5

    Arrays are accepted as well; every point has to lie in the disk.
    """
    @functools.wraps(func)
    def wrapper(*args, **kw):
        if 'z' in kw:
            z = kw['z']
        elif args:
            z = args[-1]
        else:
            raise TypeError('%s() takes the point z' % func.__name__)
        modulus = numpy.max(numpy.abs(numpy.asarray(z))) if numpy.size(z) else 0.0
        if not modulus < 1:
            raise InvalidParameter('%s() needs |z| < 1, got |z| = %g'
                                   % (func.__name__, modulus))
        return func(*args, **kw)
    return wrapper


def cached_property(f):
    """A property which value is computed only once and then stored with
    the instance for quick repeated retrieval.
    """
    def _closure(self):
        cache_key = '_cache__%s' % f.__name__
        value = self.__dict__.get(cache_key, _missing)
        if value is _missing:
            value = f(self)
            self.__dict__[cache_key] = value
        return value
    _closure.__doc__ = f.__doc__
    return property(_closure)
