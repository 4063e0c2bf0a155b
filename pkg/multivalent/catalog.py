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
The fixture catalog: every corollary and worked example as a concrete
function, parameter set and theorem to run it through.

    >>> fixture = get_fixture('ex3.11')
    >>> fixture
    <Fixture ex3.11: theorem 1, p=1 n=1 lambda=0.5 mu=-1 eta=1, M=1>
    >>> fixture.check_preconditions()

Fixtures are built on request, and every builder takes keyword overrides
(``p``, ``n``, ``a``, ``M``, ``delta``, ``gamma``, ...):

    >>> get_fixture('cor12').delta
    1.0
    >>> get_fixture('ex3.12', p=2, delta=0.5).params.p
    2
"""

import cmath
import inspect
import math
import warnings
from collections import OrderedDict

import numpy

from .errors import PreconditionViolated, UnknownFixture, InvalidParameter
from .functions import ExponentialMonomial, MonomialPlusTerm, monomial
from .operators import OperatorParams, capacity_C
from .search import search_max_a
from .settings import A_FRACTION
from .thresholds import example_bound_a, named_threshold


class Precondition(object):
    "A closed-form check on a fixture's own parameters."

    def __init__(self, label, check, description=''):
        self.label = label
        self.check = check
        self.description = description

    def __repr__(self):
        return '<Precondition %s>' % self.label

    def holds(self):
        return bool(self.check())


class Fixture(object):
    """
    One catalog entry. ``theorem`` is 1 (bound on |P - C| by M) or 2 (bound
    on Re P by delta). ``closed_form`` evaluates P from the displayed formula
    of the source result, when there is one.
    """

    def __init__(self, id, f, params, theorem, M=None, delta=None, gamma=None,
                 preconditions=(), hypothesis='', conclusion='', source='',
                 closed_form=None, notes='', variant=None, extras=None):
        self.id = id
        self.f = f
        self.params = params
        self.theorem = theorem
        self.M = M
        self.delta = delta
        self.gamma = gamma
        self.preconditions = list(preconditions)
        self.hypothesis = hypothesis
        self.conclusion = conclusion
        self.source = source
        self.closed_form = closed_form
        self.notes = notes
        self.variant = variant
        self.extras = extras or {}

    def __repr__(self):
        p = self.params
        role = 'M=%g' % self.M if self.theorem == 1 else 'delta=%g' % self.delta
        return '<Fixture %s: theorem %d, p=%d n=%d lambda=%g mu=%g eta=%g, %s>' % (
            self.id, self.theorem, p.p, p.n, p.lam, p.mu, p.eta, role)

    @property
    def role_value(self):
        return self.M if self.theorem == 1 else self.delta

    def check_preconditions(self):
        "Raises PreconditionViolated naming the first predicate that fails."
        for pre in self.preconditions:
            if not pre.holds():
                raise PreconditionViolated(pre.label, pre.description)

    def to_dict(self):
        return OrderedDict([
            ('id', self.id), ('theorem', self.theorem), ('function', repr(self.f)),
            ('params', self.params.to_dict()), ('M', self.M), ('delta', self.delta),
            ('gamma', self.gamma), ('source', self.source),
            ('hypothesis', self.hypothesis), ('conclusion', self.conclusion),
            ('preconditions', [pre.label for pre in self.preconditions]),
            ('variant', self.variant), ('notes', self.notes),
        ])


_builders = OrderedDict()


def fixture(id, without=()):
    """
    Registers a fixture builder under ``id``. The builder's keyword
    arguments are the overrides the fixture takes, less the names in
    ``without`` that this variant fixes itself.
    """
    def decorator(builder):
        _builders[id] = (builder, tuple(without))
        return builder
    return decorator


def fixture_ids():
    return list(_builders)


def _entry(id):
    try:
        return _builders[id]
    except KeyError:
        raise UnknownFixture(id)


def fixture_parameters(id):
    """
    Names of the overrides ``get_fixture`` accepts for ``id``.

        >>> fixture_parameters('ex3.11')
        ('p', 'M', 'a', 'phase')
    """
    builder, without = _entry(id)
    names = inspect.signature(builder).parameters
    return tuple(name for name in names if name != 'plan' and name not in without)


def get_fixture(id, plan=None, **overrides):
    """
    Builds fixture ``id`` with the given overrides. An override the fixture
    does not take raises InvalidParameter rather than being dropped.
    """
    builder, without = _entry(id)
    unknown = sorted(set(overrides) - set(fixture_parameters(id)))
    if unknown:
        raise InvalidParameter('fixture %s does not take %s' % (id, ', '.join(unknown)))
    if 'plan' in inspect.signature(builder).parameters:
        overrides['plan'] = plan
    return builder(**overrides)


def fixture_catalog():
    "All fixtures with their default parameters, in catalog order."
    return [get_fixture(id) for id in _builders]


def nonvanishing_radius(p, n, lam):
    """
    Largest |a| for which F and F' of z^p + a z^(p+n) have no zeros in the
    punctured disk: p(1+lam(p-1)) / ((p+n)(1+lam(p+n-1))).

        >>> nonvanishing_radius(1, 1, 0.0), nonvanishing_radius(2, 1, 1.0)
        (0.5, 0.4444444444444444)
    """
    return p * (1 + lam * (p - 1)) / ((p + n) * (1 + lam * (p + n - 1.0)))


def _role_preconditions(params, theorem, M, delta):
    C = capacity_C(params)
    if theorem == 1:
        return [Precondition('M >= C', lambda: M >= C,
                             'M = %g, C = %.17g' % (M, C))]
    return [Precondition('0 <= delta < C', lambda: 0 <= delta < C,
                         'delta = %g, C = %.17g' % (delta, C))]


def _nonvanishing(a, p, n, lam):
    bound = nonvanishing_radius(p, n, lam)
    return Precondition('F F\' != 0: |a| <= %.6g' % bound, lambda: abs(a) <= bound,
                        '|a| = %g' % abs(a))


def _hypothesis_text(theorem):
    if theorem == 1:
        return 'Re J < p(mu+eta) + nM/(M+C)'
    return 'Re J > k(mu,eta,lambda;delta)'


def _conclusion_text(theorem):
    if theorem == 1:
        return '|P - C| < M'
    return 'Re P > delta'


# -- the theorems, on the extremal function z^p

def _theorem_template(theorem, id):
    def build(p=2, n=1, lam=0.5, mu=1.0, eta=1.0, M=None, delta=None):
        params = OperatorParams(p, n, lam, mu, eta)
        C = capacity_C(params)
        if theorem == 1:
            M = 2 * C if M is None else M
        else:
            delta = C / 2 if delta is None else delta
        return Fixture(id, monomial(p), params, theorem, M=M, delta=delta,
                       preconditions=_role_preconditions(params, theorem, M, delta),
                       hypothesis=_hypothesis_text(theorem), conclusion=_conclusion_text(theorem),
                       source='Theorem %d' % theorem, closed_form=lambda z: C + 0 * z,
                       notes='f = z^p, P is identically C')
    return build

fixture('thm1', without=('delta',))(_theorem_template(1, 'thm1'))
fixture('thm2', without=('M',))(_theorem_template(2, 'thm2'))


# -- corollaries: z^p + a z^(p+n) with a small a at the substituted parameters

_SMALL_A = 0.05 * cmath.exp(1j * math.pi / 3)

# id -> theorem, lambda (None: free, default 1/2), (mu, eta) or 'gamma', default M or delta
_COROLLARIES = OrderedDict([
    ('cor1',  (1, 0.0, (1.0, 1.0), lambda p, C: 2 * C)),
    ('cor2',  (2, 0.0, (1.0, 1.0), lambda p, C: C / 4)),
    ('cor3',  (1, 0.0, 'gamma', lambda p, C: 2 * C)),
    ('cor4',  (2, 0.0, 'gamma', lambda p, C: C / 4)),
    ('cor5',  (1, 1.0, (1.0, 1.0), lambda p, C: 2 * C)),
    ('cor6',  (2, 1.0, (1.0, 1.0), lambda p, C: C / 4)),
    ('cor7',  (1, 1.0, 'gamma', lambda p, C: 2 * C)),
    ('cor8',  (2, 1.0, 'gamma', lambda p, C: C / 4)),
    ('cor9',  (2, None, 'gamma', lambda p, C: C / 4)),
    ('cor10', (2, None, (1.0, 0.0), lambda p, C: C / 4)),
    ('cor11', (1, None, (-1.0, 1.0), lambda p, C: 2.0 * p)),
    ('cor12', (2, None, (-1.0, 1.0), lambda p, C: p / 2.0)),
    ('cor13', (1, None, (1.0, -1.0), lambda p, C: 1.0 / p)),
    ('cor14', (2, None, (1.0, -1.0), lambda p, C: 1.0 / (4 * p))),
])

_COROLLARY_TEXT = {
    'cor1': ('Re[mu zf\'/f + eta(1 + zf\'\'/f\')] < p(mu+eta) + nM/(M+p^eta)',
             '|(f/z^p)^mu (f\'/z^(p-1))^eta - p^eta| < M'),
    'cor2': ('Re[mu zf\'/f + eta(1 + zf\'\'/f\')] > nu(eta,mu;delta)',
             'Re[(f/z^p)^mu (f\'/z^(p-1))^eta] > delta'),
    'cor3': ('Re[(1-gamma) zf\'/f + gamma(1 + zf\'\'/f\')] < p + nM/(M+p^gamma)',
             '|(f/z^p)^(1-gamma) (f\'/z^(p-1))^gamma - p^gamma| < M'),
    'cor4': ('Re[(1-gamma) zf\'/f + gamma(1 + zf\'\'/f\')] > xi(gamma;delta)',
             'Re[(f/z^p)^(1-gamma) (f\'/z^(p-1))^gamma] > delta'),
    'cor5': ('Re J_1 < p(mu+eta) + nM/(M+p^(2eta+mu))',
             '|(f\'/z^(p-1))^mu ((f\'+zf\'\')/z^(p-1))^eta - p^(2eta+mu)| < M'),
    'cor6': ('Re J_1 > sigma(mu,eta;delta)',
             'Re[(f\'/z^(p-1))^mu ((f\'+zf\'\')/z^(p-1))^eta] > delta'),
    'cor7': ('Re J_1(1-gamma,gamma) < p + nM/(M+p^(gamma+1))',
             '|(f\'/z^(p-1))^(1-gamma) ((f\'+zf\'\')/z^(p-1))^gamma - p^(gamma+1)| < M'),
    'cor8': ('Re J_1(1-gamma,gamma) > varrho(gamma;delta)',
             'Re[(f\'/z^(p-1))^(1-gamma) ((f\'+zf\'\')/z^(p-1))^gamma] > delta'),
    'cor9': ('f in M^lambda_{p,n}(gamma; rho(gamma,lambda;delta))',
             'f in N^lambda_{p,n}(1-gamma,gamma;delta)'),
    'cor10': ('f in T_lambda(p; rho1(lambda;delta))',
              'f in N^lambda_{p,1}(1,0;delta)'),
    'cor11': ('Re J(-1,1) < nM/(M+p)', '|zF\'/F - p| < M'),
    'cor12': ('Re J(-1,1) > varsigma(delta)', 'Re zF\'/F > delta'),
    'cor13': ('Re J(1,-1) < nMp/(Mp+1)', '|F/(zF\') - 1/p| < M'),
    'cor14': ('Re J(1,-1) > varsigma1(1,-1,lambda;delta)', 'Re F/(zF\') > delta'),
}

_THRESHOLD_OF = {'cor2': 'nu', 'cor4': 'xi', 'cor6': 'sigma', 'cor8': 'varrho',
                 'cor9': 'rho_cor9', 'cor10': 'rho1_cor10', 'cor12': 'varsigma_cor12',
                 'cor14': 'varsigma1_cor14'}


def _corollary_builder(id, theorem, fixed_lam, weights, role_default):
    def build(p=2, n=1, lam=0.5, a=_SMALL_A, mu=None, eta=None, gamma=0.5,
              M=None, delta=None):
        if id == 'cor10':
            n = 1
        lam = lam if fixed_lam is None else fixed_lam
        if weights == 'gamma':
            mu, eta = 1 - gamma, gamma
        else:
            mu = weights[0] if mu is None else mu
            eta = weights[1] if eta is None else eta
        params = OperatorParams(p, n, lam, mu, eta)
        C = capacity_C(params)
        if theorem == 1:
            M = role_default(p, C) if M is None else M
        else:
            delta = role_default(p, C) if delta is None else delta
        pre = [_nonvanishing(a, p, n, lam)] + _role_preconditions(params, theorem, M, delta)
        extras = {}
        if id in _THRESHOLD_OF:
            extras['threshold'] = _THRESHOLD_OF[id]
            extras['threshold_value'] = named_threshold(_THRESHOLD_OF[id], params, delta, gamma)
        hypothesis, conclusion = _COROLLARY_TEXT[id]
        return Fixture(id, MonomialPlusTerm(p, n, a), params, theorem, M=M, delta=delta,
                       gamma=gamma if weights == 'gamma' else None, preconditions=pre,
                       hypothesis=hypothesis, conclusion=conclusion,
                       source='Corollary %s' % id[3:], extras=extras)
    return build


def _corollary_fixed(id, theorem, fixed_lam, weights):
    "Overrides a corollary fixes by its own substitutions."
    fixed = ['delta' if theorem == 1 else 'M']
    if fixed_lam is not None:
        fixed.append('lam')
    fixed += ['mu', 'eta'] if weights == 'gamma' else ['gamma']
    if id == 'cor10':
        fixed.append('n')
    return fixed


for _id, _row in _COROLLARIES.items():
    fixture(_id, without=_corollary_fixed(_id, *_row[:3]))(_corollary_builder(_id, *_row))


# -- worked examples

def _a(size, phase):
    return size * cmath.exp(1j * phase)


def _mixed_sum(mu, eta, p, n, x):
    return mu * x / (1 + x) + eta * (p + n) * x / (p + (p + n) * x)


def _delta_rhs(delta, C):
    if delta <= C / 2:
        return delta / (2 * (delta - C))
    return (delta - C) / (2 * delta)


@fixture('ex3.1')
def _ex31(p=1, n=1, mu=1.0, eta=1.0, M=1.0, a=None, phase=math.pi / 3):
    params = OperatorParams(p, n, 0.0, mu, eta)
    if a is None:
        a = _a(A_FRACTION * example_bound_a('ex31', p, M, n=n, mu=mu, eta=eta), phase)
    x = abs(a)
    pre = [
        Precondition('(ex31a) |a| <= p/(p+n)', lambda: x <= p / float(p + n)),
        Precondition('(ex31b) mu|a|/(1+|a|) + eta(p+n)|a|/(p+(p+n)|a|) <= M/(M+p^eta)',
                     lambda: _mixed_sum(mu, eta, p, n, x) <= M / (M + p ** eta)),
        Precondition('mu, eta >= 0, mu + eta > 0', lambda: mu >= 0 and eta >= 0 and mu + eta > 0),
    ] + _role_preconditions(params, 1, M, None)
    return Fixture('ex3.1', MonomialPlusTerm(p, n, a), params, 1, M=M, preconditions=pre,
                   hypothesis='Re[mu az^n/(1+az^n) + eta a(p+n)z^n/(p+a(p+n)z^n)] < M/(M+p^eta)',
                   conclusion='|(1+az^n)^mu [p+a(p+n)z^n]^eta - p^eta| < M',
                   source='Example 3.1',
                   closed_form=lambda z: (1 + a * z ** n) ** mu * (p + a * (p + n) * z ** n) ** eta)


@fixture('ex3.2')
def _ex32(p=1, n=1, mu=-1.0, eta=-1.0, delta=0.25, a=None, phase=math.pi / 3):
    params = OperatorParams(p, n, 0.0, mu, eta)
    C = p ** eta
    if a is None:
        a = _a(A_FRACTION * example_bound_a('ex32', p, delta, n=n, mu=mu, eta=eta), phase)
    x = abs(a)
    pre = [
        Precondition('|a| <= p/(p+n)', lambda: x <= p / float(p + n)),
        Precondition('mu|a|/(1+|a|) + eta(p+n)|a|/(p+(p+n)|a|) >= delta condition',
                     lambda: _mixed_sum(mu, eta, p, n, x) >= _delta_rhs(delta, C)),
        Precondition('mu, eta <= 0, mu + eta < 0', lambda: mu <= 0 and eta <= 0 and mu + eta < 0),
    ] + _role_preconditions(params, 2, None, delta)
    return Fixture('ex3.2', MonomialPlusTerm(p, n, a), params, 2, delta=delta, preconditions=pre,
                   hypothesis='Re J > nu(eta,mu;delta)',
                   conclusion='Re{(1+az^n)^mu [p+a(p+n)z^n]^eta} > delta',
                   source='Example 3.2',
                   closed_form=lambda z: (1 + a * z ** n) ** mu * (p + a * (p + n) * z ** n) ** eta)


@fixture('ex3.3')
def _ex33(p=1, gamma=1.0, M=1.0, a=None, phase=math.pi / 3):
    params = OperatorParams(p, 1, 0.0, 1 - gamma, gamma)
    if a is None:
        a = _a(A_FRACTION * example_bound_a('ex33', p, M, gamma=gamma), phase)
    x = abs(a)
    pre = [
        Precondition('(ex33a) |a| <= p', lambda: x <= p),
        Precondition('(ex33b) |a| + gamma|a|/(p+|a|) <= M/(M+p^gamma)',
                     lambda: x + gamma * x / (p + x) <= M / (M + p ** gamma)),
        Precondition('gamma >= 0', lambda: gamma >= 0),
    ] + _role_preconditions(params, 1, M, None)
    return Fixture('ex3.3', ExponentialMonomial(p, a), params, 1, M=M, gamma=gamma,
                   preconditions=pre,
                   hypothesis='Re(az + gamma az/(p+az)) < M/(M+p^gamma)',
                   conclusion='|e^(az) (p+az)^gamma - p^gamma| < M',
                   source='Example 3.3',
                   closed_form=lambda z: numpy.exp(a * z) * (p + a * z) ** gamma)


@fixture('ex3.4')
def _ex34(p=1, gamma=1.0, delta=0.25, a=None, phase=math.pi / 3):
    params = OperatorParams(p, 1, 0.0, 1 - gamma, gamma)
    C = p ** gamma
    if a is None:
        a = _a(A_FRACTION * example_bound_a('ex34', p, delta, gamma=gamma), phase)
    x = abs(a)
    pre = [
        Precondition('|a| <= p', lambda: x <= p),
        Precondition('-|a| + gamma|a|/(p+|a|) >= delta condition',
                     lambda: -x + gamma * x / (p + x) >= _delta_rhs(delta, C)),
        Precondition('gamma >= 0', lambda: gamma >= 0),
    ] + _role_preconditions(params, 2, None, delta)
    return Fixture('ex3.4', ExponentialMonomial(p, a), params, 2, delta=delta, gamma=gamma,
                   preconditions=pre,
                   hypothesis='Re J(1-gamma,gamma) > xi(gamma;delta)',
                   conclusion='Re{e^(az) (p+az)^gamma} > delta',
                   source='Example 3.4',
                   closed_form=lambda z: numpy.exp(a * z) * (p + a * z) ** gamma,
                   notes='the |a| condition as printed bounds Re(az) by -|a| and '
                         'Re H from below by its upper bound; the hypothesis may fail '
                         'on the grid, making the run vacuous')


def _phi_forms(a, p, n):
    return {
        'printed': lambda z: a * (p + n) * z ** n / (p + (p + n) * z ** n),
        'corrected': lambda z: a * (p + n) * z ** n / (p + a * (p + n) * z ** n),
    }


def _ex35_family(id, theorem):
    def build(p=1, n=1, mu=1.0, eta=1.0, M=None, delta=None, a=None, phase=math.pi / 3,
              phi_form='corrected'):
        if phi_form not in ('printed', 'corrected'):
            raise InvalidParameter('phi_form must be "printed" or "corrected", got %r' % phi_form)
        if phi_form == 'printed':
            warnings.warn('%s: using phi as printed, without the factor a in its '
                          'denominator' % id, UserWarning, 2)
        params = OperatorParams(p, n, 1.0, mu, eta)
        C = capacity_C(params)
        if theorem == 1:
            M = C if M is None else M
        else:
            delta = C / 4 if delta is None else delta
        if a is None:
            a = _a(A_FRACTION * example_bound_a('ex35', p, n=n), phase)
        radius = p ** 2 / float((p + n) ** 2)
        pre = [Precondition('|a| <= p^2/(p+n)^2', lambda: abs(a) <= radius)]
        pre += _role_preconditions(params, theorem, M, delta)
        if theorem == 1:
            texts = ('Re[(mu+eta) phi + z phi\'/(n phi + p)] < M/(M+p^(2eta+mu))',
                     '|[p+a(p+n)z^n]^mu [p^2+a(p+n)^2 z^n]^eta - p^(2eta+mu)| < M')
        else:
            texts = ('Re[(mu+eta) phi + z phi\'/(n phi + p)] > delta condition',
                     'Re{[p+a(p+n)z^n]^mu [p^2+a(p+n)^2 z^n]^eta} > delta')
        return Fixture(id, MonomialPlusTerm(p, n, a), params, theorem, M=M, delta=delta,
                       preconditions=pre, hypothesis=texts[0], conclusion=texts[1],
                       source='Example %s' % id[2:],
                       closed_form=lambda z: ((p + a * (p + n) * z ** n) ** mu
                                              * (p ** 2 + a * (p + n) ** 2 * z ** n) ** eta),
                       variant=phi_form, extras={'phi': _phi_forms(a, p, n)[phi_form]},
                       notes='phi = a(p+n)z^n/(p+(p+n)z^n) as printed; the corrected '
                             'form has p + a(p+n)z^n in the denominator')
    return build

fixture('ex3.5', without=('delta',))(_ex35_family('ex3.5', 1))
fixture('ex3.6', without=('M',))(_ex35_family('ex3.6', 2))


def _ex37_family(id, theorem):
    def build(p=1, gamma=1.0, M=None, delta=None, a=None):
        params = OperatorParams(p, 1, 1.0, 1 - gamma, gamma)
        C = capacity_C(params)
        if theorem == 1:
            M = C if M is None else M
        else:
            delta = C / 4 if delta is None else delta
        radius = example_bound_a('ex37', p)
        # a is real here
        if a is None:
            a = A_FRACTION * radius
        pre = [Precondition('a real', lambda: complex(a).imag == 0),
               Precondition('|a| <= (2p+1-sqrt(4p+1))/2', lambda: abs(a) <= radius)]
        pre += _role_preconditions(params, theorem, M, delta)
        hypothesis = 'Re{az[1 + (1-gamma)/(az+p) + gamma(2az+2p+1)/(a^2z^2+a(2p+1)z+p^2)]}'
        if theorem == 1:
            hypothesis += ' < M/(M+p^(gamma+1))'
            conclusion = '|e^(az) (p+az)^(1-gamma) [a^2z^2+a(2p+1)z+p^2]^gamma - p^(gamma+1)| < M'
        else:
            hypothesis += ' > delta condition'
            conclusion = 'Re{e^(az) (p+az)^(1-gamma) [a^2z^2+a(2p+1)z+p^2]^gamma} > delta'
        return Fixture(id, ExponentialMonomial(p, a), params, theorem, M=M, delta=delta,
                       gamma=gamma, preconditions=pre, hypothesis=hypothesis,
                       conclusion=conclusion, source='Example %s' % id[2:],
                       closed_form=lambda z: (numpy.exp(a * z) * (p + a * z) ** (1 - gamma)
                                              * (a * a * z * z + a * (2 * p + 1) * z + p * p) ** gamma))
    return build

fixture('ex3.7', without=('delta',))(_ex37_family('ex3.7', 1))
fixture('ex3.8', without=('M',))(_ex37_family('ex3.8', 2))


@fixture('ex3.9')
def _ex39(p=1, n=1, gamma=0.5, delta=0.25, a=None, phase=math.pi / 3, plan=None):
    lam = 0.5
    params = OperatorParams(p, n, lam, 1 - gamma, gamma)
    radius = example_bound_a('ex39', p, n=n)
    if a is None:
        a = _a(A_FRACTION * search_max_a('ex3.9', phase, plan, p=p, n=n, lam=lam,
                                         gamma=gamma, delta=delta), phase)
    pre = [Precondition('|a| <= p(p+1)/((p+n)(p+n+1))', lambda: abs(a) <= radius)]
    pre += _role_preconditions(params, 2, None, delta)
    rho = named_threshold('rho_cor9', params, delta, gamma)
    return Fixture('ex3.9', MonomialPlusTerm(p, n, a), params, 2, delta=delta, gamma=gamma,
                   preconditions=pre,
                   hypothesis='f in M^(1/2)_{p,n}(gamma; rho(gamma,1/2;delta))',
                   conclusion='Re{[p+1+a(p+n+1)z^n]^(1-gamma) [p(p+1)+a(p+n)(p+n+1)z^n]^gamma}'
                              ' > 2 delta',
                   source='Example 3.9',
                   closed_form=lambda z: ((p + 1 + a * (p + n + 1) * z ** n) ** (1 - gamma)
                                          * (p * (p + 1) + a * (p + n) * (p + n + 1) * z ** n)
                                          ** gamma) / 2,
                   extras={'threshold': 'rho_cor9', 'threshold_value': rho},
                   notes='|a| is 0.9 of the largest value the grid search accepts; '
                         '"small enough" is read as a neighbourhood of the origin')


@fixture('ex3.10')
def _ex310(p=1, delta=0.25, a=None, phase=math.pi / 3):
    params = OperatorParams(p, 1, 0.5, 1.0, 0.0)
    if a is None:
        a = _a(A_FRACTION * example_bound_a('ex310', p, delta), phase)
    x = abs(a)
    quarter = (p + 1) / 4.0
    pre = [
        Precondition('|a| <= p/(p+2)', lambda: x <= p / (p + 2.0)),
        Precondition('|a| <= (p+1)delta/((p+2)(p+1-delta)) for delta <= (p+1)/4',
                     lambda: delta > quarter or x <= (p + 1) * delta / ((p + 2.0) * (p + 1 - delta))),
        Precondition('|a| <= (p+1)(p+1-2delta)/((p+2)(p+1+2delta)) for delta >= (p+1)/4',
                     lambda: delta < quarter
                     or x <= (p + 1) * (p + 1 - 2 * delta) / ((p + 2.0) * (p + 1 + 2 * delta))),
    ] + _role_preconditions(params, 2, None, delta)
    return Fixture('ex3.10', MonomialPlusTerm(p, 1, a), params, 2, delta=delta,
                   preconditions=pre, hypothesis='Re[p + phi] > rho1(1/2;delta)',
                   conclusion='f in N^(1/2)_{p,1}(1,0;delta)', source='Example 3.10',
                   closed_form=lambda z: (p + 1 + a * (p + 2) * z) / 2,
                   extras={'threshold': 'rho1_cor10',
                           'threshold_value': named_threshold('rho1_cor10', params, delta)})


def _phi_half(a, p):
    return lambda z: a * (p + 2) * z / (p + 1 + a * (p + 2) * z)


def _ex311_family(id, theorem, mu, eta, role_name):
    key = 'ex' + id[2:].replace('.', '')

    def build(p=1, M=1.0, delta=0.25, a=None, phase=math.pi / 3):
        params = OperatorParams(p, 1, 0.5, mu, eta)
        role = M if role_name == 'M' else delta
        bound = example_bound_a(key, p, role)
        if a is None:
            a = _a(A_FRACTION * bound, phase)
        pre = [Precondition('|a| <= %s bound %.6g' % (id, bound), lambda: abs(a) <= bound),
               Precondition('|a| <= p/(p+2)', lambda: abs(a) <= p / (p + 2.0))]
        pre += _role_preconditions(params, theorem, M if theorem == 1 else None,
                                   delta if theorem == 2 else None)
        phi = _phi_half(a, p)
        if mu < 0:
            closed = lambda z: p + phi(z)
            texts = {1: '|a(p+2)z/(p+1+a(p+2)z)| < M',
                     2: 'Re[p + a(p+2)z/(p+1+a(p+2)z)] > delta'}
        else:
            closed = lambda z: 1 / (p + phi(z))
            texts = {1: '|1/(p + a(p+2)z/(p+1+a(p+2)z)) - 1/p| < M',
                     2: 'Re 1/(p + a(p+2)z/(p+1+a(p+2)z)) > delta'}
        return Fixture(id, MonomialPlusTerm(p, 1, a), params, theorem,
                       M=M if theorem == 1 else None, delta=delta if theorem == 2 else None,
                       preconditions=pre,
                       hypothesis='Re[%sz phi\'/(p + phi)] %s, phi = a(p+2)z/(p+1+a(p+2)z)'
                                  % ('' if mu < 0 else '-',
                                     '< nM/(M+C)' if theorem == 1 else '> k'),
                       conclusion=texts[theorem], source='Example %s' % id[2:],
                       closed_form=closed, extras={'phi': phi})
    return build

fixture('ex3.11', without=('delta',))(_ex311_family('ex3.11', 1, -1.0, 1.0, 'M'))
fixture('ex3.12', without=('M',))(_ex311_family('ex3.12', 2, -1.0, 1.0, 'delta'))
fixture('ex3.13', without=('delta',))(_ex311_family('ex3.13', 1, 1.0, -1.0, 'M'))
fixture('ex3.14', without=('M',))(_ex311_family('ex3.14', 2, 1.0, -1.0, 'delta'))
