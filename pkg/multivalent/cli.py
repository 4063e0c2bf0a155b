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
Command-line front end::

    multivalent verify --fixture ex3.11 --p 1 --M 1
    multivalent verify --all --format json --workers 4
    multivalent verify --function monomial_plus:p=2,n=1,a=0.1i --theorem 2 --lambda 0.5 --delta 1
    multivalent scan --theorem 1 --p 2 --mu 1 --eta 1 --M 3
    multivalent membership --function exp_monomial:p=1,a=0.2 --class starlike --alpha 0.5
    multivalent threshold --name k --p 2 --lambda 0.5 --mu 1 --eta -1 --delta 0.3
    multivalent bound --example ex3.11 --p 1 --M 1
    multivalent catalog

Exit codes: 0 success, 1 theorem violation or failed certification,
2 usage error, 3 any other error.
"""

import argparse
import logging
import sys

from .admissibility import PsiSpec, ScanGrid, scan_lemma1, scan_lemma2
from .catalog import fixture_catalog, fixture_parameters
from .classes import CLASS_KINDS, make_class, membership
from .errors import MultivalentError, UsageError
from .functions import parse_complex, parse_function
from .harness import verify_catalog, verify_fixture, verify_theorem1, verify_theorem2
from .operators import OperatorParams
from .reports import FORMATS, emit_report
from .sampling import SamplingPlan
from .settings import DEFAULT_ANGLES, DEFAULT_RADII, ORIGIN_EPSILON, THETA_COUNT, ZERO_EPSILON
from .thresholds import THRESHOLD_NAMES, example_bound_a, named_threshold


logger = logging.getLogger(__name__)

COMMANDS = ('verify', 'scan', 'membership', 'threshold', 'bound', 'catalog')

# flag -> RunConfig attribute, for the operator parameters
_PARAM_FLAGS = (('--p', 'p', int), ('--n', 'n', int), ('--lambda', 'lam', float),
                ('--mu', 'mu', float), ('--eta', 'eta', float), ('--gamma', 'gamma', float),
                ('--M', 'M', float), ('--delta', 'delta', float))


class RunConfig(object):
    "Validated command-line settings of one run."

    def __init__(self, **values):
        self.__dict__.update(values)

    def __repr__(self):
        shown = ', '.join('%s=%r' % (k, v) for k, v in sorted(self.__dict__.items())
                          if v is not None and k != 'command')
        return 'RunConfig(%s, %s)' % (self.command, shown)

    def plan(self):
        return SamplingPlan(self.radii or DEFAULT_RADII, self.angles, self.origin_epsilon,
                            self.zero_epsilon)

    def params(self, p=None, n=None):
        values = dict(p=self.p or p or 1, n=self.n or n or 1)
        for name in ('lam', 'mu', 'eta'):
            if getattr(self, name) is not None:
                values[name] = getattr(self, name)
        return OperatorParams(**values)


class _Parser(argparse.ArgumentParser):

    def error(self, message):
        raise UsageError(None, message)


def _complex_arg(text):
    return parse_complex(text)


def _radii_arg(text):
    return tuple(float(r) for r in text.split(','))


def _build_parser():
    common = _Parser(add_help=False)
    common.add_argument('--format', dest='output', choices=FORMATS, default='text')
    common.add_argument('--out', dest='output_path', default=None)
    common.add_argument('-v', '--verbose', action='count', default=0)
    common.add_argument('--radii', type=_radii_arg, default=None,
                        help='comma separated ring radii in (0,1)')
    common.add_argument('--angles', type=int, default=DEFAULT_ANGLES)
    common.add_argument('--origin-epsilon', type=float, default=ORIGIN_EPSILON)
    common.add_argument('--zero-epsilon', type=float, default=ZERO_EPSILON)
    for flag, dest, kind in _PARAM_FLAGS:
        common.add_argument(flag, dest=dest, type=kind, default=None)

    parser = _Parser(prog='multivalent', description=__doc__.split('::')[0].strip())
    commands = parser.add_subparsers(dest='command')

    verify = commands.add_parser('verify', parents=[common], help='run a theorem check')
    verify.add_argument('--fixture', dest='fixture_id', default=None)
    verify.add_argument('--all', action='store_true')
    verify.add_argument('--workers', type=int, default=1)
    verify.add_argument('--function', dest='function_spec', default=None)
    verify.add_argument('--theorem', type=int, choices=(1, 2), default=None)
    verify.add_argument('--a', type=_complex_arg, default=None)
    verify.add_argument('--phase', type=float, default=None)
    verify.add_argument('--phi-form', choices=('printed', 'corrected'), default=None)

    scan = commands.add_parser('scan', parents=[common], help='scan an admissibility condition')
    scan.add_argument('--theorem', type=int, choices=(1, 2), required=True)
    scan.add_argument('--theta-count', type=int, default=THETA_COUNT)

    member = commands.add_parser('membership', parents=[common], help='check class membership')
    member.add_argument('--function', dest='function_spec', required=True)
    member.add_argument('--class', dest='class_kind', choices=sorted(CLASS_KINDS), required=True)
    member.add_argument('--alpha', type=float, default=None)
    member.add_argument('--beta', type=float, default=None)

    threshold = commands.add_parser('threshold', parents=[common], help='evaluate a threshold')
    threshold.add_argument('--name', required=True)

    bound = commands.add_parser('bound', parents=[common], help='largest |a| of an example')
    bound.add_argument('--example', required=True)

    commands.add_parser('catalog', parents=[common], help='list the fixtures')
    return parser


def _require(config, *names):
    for name in names:
        if getattr(config, name, None) is None:
            flag = dict((dest, flag) for flag, dest, _ in _PARAM_FLAGS).get(name, '--' + name)
            raise UsageError(flag, 'required by "%s"' % config.command)


def _validate(config):
    if config.lam is not None and not 0 <= config.lam <= 1:
        raise UsageError('--lambda', 'lambda must lie in [0,1], got %r' % config.lam)
    if config.p is not None and config.p < 1:
        raise UsageError('--p', 'p must be a positive integer, got %r' % config.p)
    if config.n is not None and config.n < 1:
        raise UsageError('--n', 'n must be a positive integer, got %r' % config.n)
    if config.delta is not None and config.delta < 0:
        raise UsageError('--delta', 'delta must be nonnegative, got %r' % config.delta)
    if config.radii and any(not 0 < r < 1 for r in config.radii):
        raise UsageError('--radii', 'radii must lie in (0,1)')
    if config.angles < 16:
        raise UsageError('--angles', 'angles_per_ring must be at least 16')

    if config.command == 'verify':
        chosen = [x for x in (config.fixture_id, config.function_spec) if x] + (
            ['--all'] if config.all else [])
        if len(chosen) != 1:
            raise UsageError('--fixture', 'verify needs exactly one of --fixture, --function, --all')
        if config.function_spec:
            _require(config, 'theorem')
            _require(config, 'M' if config.theorem == 1 else 'delta')
    elif config.command == 'scan':
        _require(config, 'M' if config.theorem == 1 else 'delta')
    elif config.command == 'threshold':
        _require(config, 'delta')
        if config.name not in THRESHOLD_NAMES and config.name not in (
                'k', 'rho', 'rho1', 'varsigma', 'varsigma1'):
            raise UsageError('--name', 'unknown threshold "%s"' % config.name)


def parse_args(argv=None):
    """
    Parses and validates ``argv`` (``sys.argv[1:]`` by default) into a
    RunConfig. Raises UsageError naming the offending flag.
    """
    namespace = _build_parser().parse_args(argv)
    if not namespace.command:
        raise UsageError(None, 'a command is required: %s' % ', '.join(COMMANDS))
    config = RunConfig(**vars(namespace))
    _validate(config)
    return config


_OVERRIDE_FLAGS = dict([(dest, flag) for flag, dest, _ in _PARAM_FLAGS]
                       + [('a', '--a'), ('phase', '--phase'), ('phi_form', '--phi-form')])


def _fixture_overrides(config):
    "The fixture overrides given on the command line; refuses any the fixture fixes itself."
    accepted = fixture_parameters(config.fixture_id)
    overrides = {}
    for name in ('p', 'n', 'lam', 'mu', 'eta', 'gamma', 'M', 'delta', 'a', 'phase', 'phi_form'):
        value = getattr(config, name, None)
        if value is None:
            continue
        if name not in accepted:
            raise UsageError(_OVERRIDE_FLAGS[name], 'fixture %s does not take this parameter; '
                             'it accepts %s' % (config.fixture_id, ', '.join(
                                 _OVERRIDE_FLAGS[k] for k in accepted)))
        overrides[name] = value
    return overrides


def _cmd_verify(config):
    plan = config.plan()
    if config.all:
        return verify_catalog(plan, config.workers)
    if config.fixture_id:
        return verify_fixture(config.fixture_id, plan, **_fixture_overrides(config))
    f = parse_function(config.function_spec)
    if config.p is not None and config.p != f.p:
        raise UsageError('--p', 'the function has p=%d, got %d' % (f.p, config.p))
    params = config.params(f.p, f.n)
    if config.theorem == 1:
        return verify_theorem1(f, params, config.M, plan, fixture_id=config.function_spec)
    return verify_theorem2(f, params, config.delta, plan, fixture_id=config.function_spec)


def _cmd_scan(config):
    which = 'thm%d' % config.theorem
    spec = PsiSpec(which, config.params(), M=config.M, delta=config.delta)
    grid = ScanGrid(theta_count=config.theta_count)
    return scan_lemma1(spec, grid) if which == 'thm1' else scan_lemma2(spec, grid)


def _cmd_membership(config):
    f = parse_function(config.function_spec)
    cls = CLASS_KINDS[config.class_kind]
    values = {'p': config.p or f.p} if 'p' in cls.fields else {}
    for name in cls.fields:
        value = getattr(config, name, None)
        if value is not None and name not in values:
            values[name] = value
    return membership(f, make_class(config.class_kind, **values), config.plan())


def _cmd_threshold(config):
    return named_threshold(config.name, config.params(), config.delta, config.gamma)


def _cmd_bound(config):
    extra = dict((name, getattr(config, name)) for name in ('n', 'mu', 'eta', 'gamma')
                 if getattr(config, name) is not None)
    role = config.M if config.M is not None else config.delta
    return example_bound_a(config.example, config.p or 1, role, **extra)


def _cmd_catalog(config):
    if config.output == 'text':
        return '\n'.join(repr(fixture) for fixture in fixture_catalog())
    return [fixture.to_dict() for fixture in fixture_catalog()]


_HANDLERS = {'verify': _cmd_verify, 'scan': _cmd_scan, 'membership': _cmd_membership,
             'threshold': _cmd_threshold, 'bound': _cmd_bound, 'catalog': _cmd_catalog}


def _configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')


def main(argv=None):
    try:
        config = parse_args(argv)
    except UsageError as e:
        sys.stderr.write('multivalent: usage error: %s\n' % e)
        return 2
    _configure_logging(config.verbose)
    logger.debug('%r', config)
    try:
        result = _HANDLERS[config.command](config)
        return emit_report(result, config.output, config.output_path)
    except UsageError as e:
        sys.stderr.write('multivalent: usage error: %s\n' % e)
        return 2
    except MultivalentError as e:
        sys.stderr.write('multivalent: error: %s\n' % e)
        return 3


if __name__ == '__main__':
    sys.exit(main())
