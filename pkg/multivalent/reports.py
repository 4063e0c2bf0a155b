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
Rendering of reports as text, JSON or CSV, and the exit code that goes with
them. JSON output is byte-stable: keys are sorted, floats are written with
their shortest round-tripping repr, non-finite values become ``null`` and
wall times are left out.
"""

import csv
import io
import json
import math
import sys
from collections import OrderedDict

from .admissibility import ScanResult
from .classes import MembershipReport
from .errors import InvalidParameter, ReportWriteError
from .harness import VerificationReport

FORMATS = ('text', 'json', 'csv')


def _number(x):
    if x is None:
        return None
    x = float(x)
    return x if math.isfinite(x) else None


def _point(z, value):
    return OrderedDict([('z', OrderedDict([('re', _number(z.real)), ('im', _number(z.imag))])),
                        ('value', _number(value))])


def _params(params):
    return OrderedDict((k, params.to_dict()[k]) for k in ('p', 'n', 'lam', 'mu', 'eta'))


def _verification_dict(report):
    plan = report.plan
    return OrderedDict([
        ('fixture_id', report.fixture_id),
        ('theorem', report.theorem),
        ('params', _params(report.params)),
        (report.role, _number(report.role_value)),
        ('grid', OrderedDict([('radii', list(plan.radii)),
                              ('angles_per_ring', plan.angles_per_ring),
                              ('origin_epsilon', plan.origin_epsilon),
                              ('denominator_epsilon', plan.denominator_epsilon)])),
        ('hypothesis', OrderedDict([('min_margin', _number(report.hypothesis_min_margin)),
                                    ('holds', report.hypothesis_holds)])),
        ('conclusion', OrderedDict([('min_margin', _number(report.conclusion_min_margin)),
                                    ('holds', report.conclusion_holds)])),
        ('implication_ok', report.implication_ok),
        ('vacuous', report.vacuous),
        ('points_total', report.points_total),
        ('excluded_points', report.points_excluded),
        ('branch_crossings', report.branch_crossings),
        ('side_min_modulus', _number(report.side_min_modulus)),
        ('variant', report.variant),
        ('notes', report.notes),
        ('worst_points', [_point(z, v) for z, v in report.worst_points]),
    ])


def _scan_dict(result):
    spec = result.spec
    columns = result.columns[:2]
    return OrderedDict([
        ('scan', spec.which),
        ('params', _params(spec.params)),
        ('M', _number(spec.M)),
        ('delta', _number(spec.delta)),
        ('bound', _number(result.bound)),
        ('value', _number(result.value)),
        ('where', OrderedDict(zip(columns, [_number(c) for c in result.where]))),
        ('margin', _number(result.margin)),
        ('certified', result.certified),
        ('excluded_points', result.excluded),
    ])


def _membership_dict(report):
    return OrderedDict([
        ('class', report.class_id.kind),
        ('class_params', report.class_id.to_dict()),
        ('function', repr(report.function)),
        ('min_value', _number(report.min_value)),
        ('bound', _number(report.class_id.bound)),
        ('margin', _number(report.margin)),
        ('side_min_modulus', _number(report.side_min_modulus)),
        ('holds', report.holds),
        ('points_total', report.points_total),
        ('excluded_points', report.points_excluded),
        ('branch_crossings', report.branch_crossings),
        ('worst_points', [_point(z, v) for z, v in report.worst_points]),
    ])


def report_to_dict(report):
    "The JSON-ready form of a report, a list of reports or a plain value."
    if isinstance(report, VerificationReport):
        return _verification_dict(report)
    if isinstance(report, ScanResult):
        return _scan_dict(report)
    if isinstance(report, MembershipReport):
        return _membership_dict(report)
    if isinstance(report, (list, tuple)):
        return [report_to_dict(r) for r in report]
    if isinstance(report, dict):
        return OrderedDict((k, report_to_dict(v)) for k, v in report.items())
    if isinstance(report, complex):
        return OrderedDict([('re', _number(report.real)), ('im', _number(report.imag))])
    if isinstance(report, float):
        return _number(report)
    return report


def to_json(report):
    return json.dumps(report_to_dict(report), indent=2, sort_keys=True, allow_nan=False) + '\n'


def exit_code(report):
    """
    0 when a verification's implication holds (vacuously or not), a scan is
    certified or a membership holds; 1 otherwise. Lists pass when every
    member does.
    """
    if isinstance(report, VerificationReport):
        return 0 if report.implication_ok else 1
    if isinstance(report, ScanResult):
        return 0 if report.certified else 1
    if isinstance(report, MembershipReport):
        return 0 if report.holds else 1
    if isinstance(report, (list, tuple)):
        return max([exit_code(r) for r in report] or [0])
    return 0


def _verdict(holds):
    return 'holds' if holds else 'FAILS'


def _verification_text(report):
    p = report.params
    lines = [
        '%s (theorem %d, %s = %.6g)' % (report.fixture_id, report.theorem, report.role,
                                       report.role_value),
        '  params      p=%d n=%d lambda=%g mu=%g eta=%g' % (p.p, p.n, p.lam, p.mu, p.eta),
        '  grid        %d points, %d excluded, %d branch crossings'
        % (report.points_total, report.points_excluded, report.branch_crossings),
        '  hypothesis  min margin %+.6e  %s' % (report.hypothesis_min_margin,
                                               _verdict(report.hypothesis_holds)),
        '  conclusion  min margin %+.6e  %s' % (report.conclusion_min_margin,
                                               _verdict(report.conclusion_holds)),
        '  implication %s%s' % ('ok' if report.implication_ok else 'VIOLATED',
                                '  VACUOUS' if report.vacuous else ''),
    ]
    if report.variant:
        lines.append('  variant     %s' % report.variant)
    if report.notes:
        lines.append('  notes       %s' % report.notes)
    if report.worst_points:
        lines.append('  worst points (conclusion margin):')
        lines.extend('    %+.6f%+.6fi  %+.6e' % (z.real, z.imag, v) for z, v in report.worst_points)
    return '\n'.join(lines)


def _scan_text(result):
    a, b = result.columns[:2]
    return '\n'.join([
        '%s scan, bound %.17g' % (result.spec.which, result.bound),
        '  extreme Re psi %.17g at %s=%.6g %s=%.6g' % (result.value, a, result.where[0],
                                                      b, result.where[1]),
        '  margin %+.6e, %d points excluded' % (result.margin, result.excluded),
        '  %s' % ('certified' if result.certified else 'NOT certified'),
    ])


def _membership_text(report):
    return '\n'.join([
        '%r' % report.class_id,
        '  min value %.17g, bound %g, margin %+.6e' % (report.min_value, report.class_id.bound,
                                                      report.margin),
        '  side condition min modulus %.6g' % report.side_min_modulus,
        '  %d of %d points excluded' % (report.points_excluded, report.points_total),
        '  member: %s' % ('yes' if report.holds else 'NO'),
    ])


def to_text(report):
    if isinstance(report, VerificationReport):
        return _verification_text(report) + '\n'
    if isinstance(report, ScanResult):
        return _scan_text(report) + '\n'
    if isinstance(report, MembershipReport):
        return _membership_text(report) + '\n'
    if isinstance(report, (list, tuple)):
        return ''.join(to_text(r) for r in report)
    if isinstance(report, float):
        return '%.17g\n' % report
    return '%s\n' % (report,)


def _csv_rows(report):
    if isinstance(report, VerificationReport):
        for z, value in report.worst_points:
            yield [report.fixture_id, repr(z.real), repr(z.imag), repr(value)]
    elif isinstance(report, MembershipReport):
        for z, value in report.worst_points:
            yield [report.class_id.kind, repr(z.real), repr(z.imag), repr(value)]
    elif isinstance(report, ScanResult):
        for row in report.rows:
            yield [report.spec.which] + [repr(float(v)) for v in row]
    elif isinstance(report, (list, tuple)):
        for r in report:
            for row in _csv_rows(r):
                yield row
    else:
        yield [repr(report)]


def to_csv(report):
    if isinstance(report, ScanResult):
        header = ['scan'] + list(report.columns)
    else:
        header = ['id', 're', 'im', 'value']
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(_csv_rows(report))
    return out.getvalue()


_RENDERERS = {'text': to_text, 'json': to_json, 'csv': to_csv}


def emit_report(report, format='text', path=None, stream=None):
    """
    Writes ``report`` to ``path`` (or ``stream``, stdout by default) and
    returns the exit code.
    """
    try:
        render = _RENDERERS[format]
    except KeyError:
        raise InvalidParameter('format must be one of %s, got %r' % (', '.join(FORMATS), format))
    payload = render(report)
    try:
        if path:
            with open(path, 'w') as handle:
                handle.write(payload)
        else:
            (stream or sys.stdout).write(payload)
    except (IOError, OSError) as e:
        raise ReportWriteError('cannot write report to %s: %s' % (path or 'stream', e))
    return exit_code(report)
