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

" Exceptions raised by the package. "


class MultivalentError(Exception): pass


class InvalidParameter(MultivalentError, ValueError): pass

class InvalidNormalization(InvalidParameter): pass

class InvalidDelta(InvalidParameter): pass

class InvalidLogArgument(InvalidParameter): pass


class SeriesError(MultivalentError, ArithmeticError): pass

class DivisionByZeroSeries(SeriesError, ZeroDivisionError): pass


class NearZeroDenominator(MultivalentError, ArithmeticError):
    "A denominator of an operator came within the zero tolerance."

    def __init__(self, factor, modulus, point=None):
        self.factor = factor
        self.modulus = modulus
        self.point = point
        super(NearZeroDenominator, self).__init__(
            '%s degenerates (|%s| = %.3g) at z = %s' % (factor, factor, modulus, point))


class BranchAmbiguity(MultivalentError, ArithmeticError):
    "The origin-rooted branch of a power cannot be told apart from another."

    def __init__(self, point, reason):
        self.point = point
        self.reason = reason
        super(BranchAmbiguity, self).__init__('at z = %s: %s' % (point, reason))


class PreconditionViolated(MultivalentError):
    def __init__(self, predicate, detail=''):
        self.predicate = predicate
        msg = 'precondition "%s" does not hold' % predicate
        if detail:
            msg = '%s (%s)' % (msg, detail)
        super(PreconditionViolated, self).__init__(msg)


class UnknownFixture(MultivalentError, KeyError):
    def __str__(self):
        return 'unknown fixture "%s"' % self.args[0]


class NoFeasibleA(MultivalentError): pass


class UsageError(MultivalentError):
    def __init__(self, flag, message):
        self.flag = flag
        super(UsageError, self).__init__('%s: %s' % (flag, message) if flag else message)


class ReportWriteError(MultivalentError, IOError): pass
