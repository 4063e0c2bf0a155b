# -*- coding: utf-8 -*-

import json

import pytest

from multivalent.cli import _fixture_overrides, main, parse_args
from multivalent.errors import ReportWriteError, UsageError
from multivalent.reports import emit_report

SMALL = ['--radii', '0.3,0.6,0.9', '--angles', '32']


def test_parse_args():
    config = parse_args(['verify', '--fixture', 'ex3.11', '--p', '1', '--M', '1'])
    assert config.command == 'verify'
    assert config.fixture_id == 'ex3.11'
    assert (config.p, config.M) == (1, 1.0)
    assert config.output == 'text'
    assert config.plan().angles_per_ring == 256

    config = parse_args(['scan', '--theorem', '2', '--delta', '0.5'] + SMALL)
    assert config.plan().radii == (0.3, 0.6, 0.9)
    assert config.params().to_tuple() == (1, 1, 0.0, 1.0, 0.0)


@pytest.mark.parametrize('argv,flag', [
    (['verify', '--fixture', 'ex3.11', '--lambda', '1.5'], '--lambda'),
    (['verify', '--fixture', 'ex3.11', '--radii', '0.5,1.2'], '--radii'),
    (['verify', '--fixture', 'ex3.11', '--angles', '8'], '--angles'),
    (['verify', '--function', 'monomial:p=2', '--theorem', '1'], '--M'),
    (['threshold', '--name', 'k'], '--delta'),
    (['threshold', '--name', 'kappa', '--delta', '0.1'], '--name'),
])
def test_invalid_flags(argv, flag):
    with pytest.raises(UsageError) as info:
        parse_args(argv)
    assert info.value.flag == flag


def test_usage_errors_exit_2(capsys):
    assert main([]) == 2
    assert main(['frobnicate']) == 2
    assert main(['verify']) == 2
    assert main(['verify', '--fixture', 'ex3.11', '--lambda', '2']) == 2
    assert 'lambda must lie in [0,1]' in capsys.readouterr().err


def test_threshold(capsys):
    argv = ['threshold', '--name', 'k', '--p', '2', '--lambda', '0.5', '--mu', '1',
            '--eta', '-1', '--delta', '0.3']
    assert main(argv) == 0
    assert float(capsys.readouterr().out) == pytest.approx(-1.0 / 3)


def test_bound(capsys):
    assert main(['bound', '--example', 'ex3.10', '--p', '1', '--delta', '0.75']) == 0
    assert float(capsys.readouterr().out) == pytest.approx(2 * 0.5 / (3 * 3.5))


def test_verify_fixture_json(capsys):
    assert main(['verify', '--fixture', 'ex3.11', '--format', 'json'] + SMALL) == 0
    report = json.loads(capsys.readouterr().out)
    assert report['fixture_id'] == 'ex3.11'
    assert report['M'] == 1.0
    assert report['implication_ok'] is True
    assert report['grid']['angles_per_ring'] == 32
    assert report['points_total'] == 96
    assert len(report['worst_points']) == 5


def test_json_is_deterministic(capsys):
    argv = ['verify', '--fixture', 'cor2', '--format', 'json'] + SMALL
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first


def test_verify_csv(capsys):
    assert main(['verify', '--fixture', 'ex3.12', '--format', 'csv'] + SMALL) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 'id,re,im,value'
    assert len(lines) == 6
    assert lines[1].startswith('ex3.12,')


def test_vacuous_run_is_marked(capsys):
    # Re zf'/f = 1 + Re(az) reaches 1.72 > 1 + 1/2 on |z| = 0.9
    argv = ['verify', '--function', 'exp_monomial:p=1,a=0.8', '--theorem', '1',
            '--M', '1'] + SMALL
    assert main(argv) == 0
    out = capsys.readouterr().out
    assert 'VACUOUS' in out
    assert 'hypothesis  min margin -' in out


def test_membership_failure_exits_1(capsys):
    argv = ['membership', '--function', 'exp_monomial:p=1,a=0.8', '--class', 'starlike',
            '--alpha', '0.5'] + SMALL
    assert main(argv) == 1
    assert 'member: NO' in capsys.readouterr().out
    argv[-5] = '0.2'
    assert main(argv) == 0


def test_scan(capsys):
    assert main(['scan', '--theorem', '1', '--p', '2', '--mu', '1', '--eta', '1',
                 '--M', '10', '--theta-count', '64']) == 0
    assert 'certified' in capsys.readouterr().out


def test_catalog_listing(capsys):
    assert main(['catalog']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 30
    assert lines[0].startswith('<Fixture thm1: theorem 1')


def test_unwritable_output(tmp_path, capsys):
    target = str(tmp_path / 'missing' / 'report.json')
    with pytest.raises(ReportWriteError):
        emit_report(0.5, 'json', target)
    assert main(['bound', '--example', 'ex3.9', '--p', '1', '--out', target]) == 3
    assert 'cannot write report' in capsys.readouterr().err


def test_output_file(tmp_path):
    target = tmp_path / 'report.txt'
    assert main(['bound', '--example', 'ex3.9', '--p', '1', '--out', str(target)]) == 0
    assert float(target.read_text()) == pytest.approx(1.0 / 3)


def test_fixture_override_is_applied(capsys):
    argv = ['verify', '--fixture', 'ex3.12', '--p', '2', '--delta', '0.5', '--format', 'json']
    assert main(argv + SMALL) == 0
    report = json.loads(capsys.readouterr().out)
    assert report['delta'] == 0.5
    assert report['params']['p'] == 2


@pytest.mark.parametrize('extra, flag', [
    (['--lambda', '0.2', '--mu', '3'], '--lambda'),
    (['--mu', '3'], '--mu'),
    (['--delta', '0.5'], '--delta'),
])
def test_fixture_refuses_fixed_parameters(capsys, extra, flag):
    assert main(['verify', '--fixture', 'ex3.11'] + extra + SMALL) == 2
    err = capsys.readouterr().err
    assert flag in err
    assert 'does not take' in err

    config = parse_args(['verify', '--fixture', 'ex3.11'] + extra)
    with pytest.raises(UsageError) as info:
        _fixture_overrides(config)
    assert info.value.flag == flag


def test_corollary_refuses_its_substitutions(capsys):
    assert main(['verify', '--fixture', 'cor10', '--n', '2'] + SMALL) == 2
    assert '--n' in capsys.readouterr().err


def test_function_p_must_agree(capsys):
    argv = ['verify', '--function', 'monomial:p=2', '--theorem', '1', '--M', '10']
    assert main(argv + ['--p', '3'] + SMALL) == 2
    assert '--p' in capsys.readouterr().err
    assert main(argv + ['--p', '2'] + SMALL) == 0
