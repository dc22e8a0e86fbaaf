import csv
import json
from io import StringIO

import pytest

from kcore.cli import EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_UNKNOWN_COMMAND, run, parse_core, parse_tableau
from kcore.core import Core
from kcore.exceptions import CoreError, KcoreValueError, TableauError
from kcore.partition import Partition

STANDARD_B = '1,2,3,4,5,7/4,5,7/6/7'
SEMISTANDARD_1 = '1,2,2,2,3,4,4,6/2,3,4,4,6/4,6/5'


def call(*argv):
    out, err = StringIO(), StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize('given,expected', [
    (('partition-to-core', '-k', '4', '4,3,2,2,1,1'), '9,5,3,2,1,1\n'),
    (('partition-to-core', '-k', '2', '-'), '-\n'),
    (('partition-to-core', '-k', '4', '4,3,2,2,1,1', '--format', 'json'), '{"k":4,"shape":[9,5,3,2,1,1]}\n'),
    (('core-to-partition', '-k', '4', '9,5,3,2,1,1'), '4,3,2,2,1,1\n'),
    (('core-to-partition', '-k', '4', '{"k":4,"shape":[9,5,3,2,1,1]}'), '4,3,2,2,1,1\n'),
    (('core-to-partition', '-k', '4', '[9,5,3,2,1,1]', '--format', 'json'), '[4,3,2,2,1,1]\n'),
    (('kskew', '-k', '4', '4,3,2,2,1,1'), '9,5,3,2,1,1/5,2,1\n'),
    (('kconjugate', '-k', '4', '4,3,2,2,1,1'), '3,2,2,1,1,1,1,1,1\n'),
    (('leq', '-k', '3', '2,2', '3,2,1,1,1,1'), 'false\n'),
    (('leq', '-k', '3', '-', '3,2,1'), 'true\n'),
    (('leq', '-k', '3', '-', '3,2,1', '--format', 'json'), 'true\n'),
    (('word', '-k', '3', STANDARD_B), '1 2 0 3 2 1 0\n'),
    (('tableau', '-k', '3', '1 2 0 3 2 1 0'), '7\n6\n4 5 7\n1 2 3 4 5 7\n'),
    (('phi', '-k', '3', '3,2,2,1'), '1 3 2 0 3 2 1 0\n'),
    (('peel', '-k', '2', '1', '-'), '0\n'),
])
def test_single_output(given, expected):
    code, out, _ = call(*given)

    assert code == EXIT_OK
    assert out == expected


def test_covers():
    code, out, err = call('covers', '-k', '4', '4,2,1,1')

    assert code == EXIT_OK
    assert out == '4,2,1,1,1\n4,2,2,1\n'
    assert err == '2 covers\n'

    for method in ['definition', 'residue']:
        assert call('covers', '-k', '4', '4,2,1,1', '--method', method)[1] == out

    _, out, _ = call('covers', '-k', '4', '4,2,1,1', '--direction', 'down')
    assert out == '4,1,1,1\n4,2,1\n'

    _, out, _ = call('covers', '-k', '4', '4,2,1,1', '--format', 'json')
    assert out == '[4,2,1,1,1]\n[4,2,2,1]\n'


def test_chains():
    code, out, err = call('chains', '-k', '2', '2,1')

    assert code == EXIT_OK
    assert out == '- < 1 < 2 < 2,1\n'
    assert err == '1 chains\n'

    _, out, err = call('chains', '-k', '3', '3,3,2,1', '--evaluation', '1,3,1,2,1,1', '--format', 'json')

    assert err == '3 chains\n'
    assert all(json.loads(line)['steps'][-1] == [3, 3, 2, 1] for line in out.splitlines())


def test_tableaux():
    code, out, err = call('tableaux', '-k', '3', '3,2,1,1', '--standard')

    assert code == EXIT_OK
    assert err == '4 tableaux\n'
    assert out.startswith('7\n6\n4 5 7\n1 2 3 4 5 7\n\n')
    assert out.count('\n\n') == 4

    _, out, err = call('tableaux', '-k', '3', '3,3,2,1', '--evaluation', '1,3,1,2,1,1', '--format', 'json')

    assert err == '3 tableaux\n'
    assert json.loads(out.splitlines()[0])['rows'] == [[1, 2, 2, 2, 3, 4, 4, 5], [2, 3, 4, 4, 5], [4, 5], [6]]


def test_tableaux_requires_mode():
    code, _, _ = call('tableaux', '-k', '3', '3,2,1,1')
    assert code == 2


def test_standardize():
    code, out, _ = call('standardize', '-k', '3', SEMISTANDARD_1)

    assert code == EXIT_OK
    assert out == '8\n7 9\n4 5 6 7 9\n1 2 3 4 5 6 7 9\n'

    code, out, err = call('standardize', '-k', '3', SEMISTANDARD_1, '--steps')

    assert out.splitlines() == ['6 3 9', '5 1 8', '4 2 7', '4 1 6', '3 0 5', '2 3 4', '2 2 3', '2 1 2', '1 0 1']
    assert err == '9 steps\n'

    _, out, _ = call('standardize', '-k', '3', SEMISTANDARD_1, '--steps', '--format', 'json')
    assert json.loads(out.splitlines()[0]) == {'letter': 6, 'residue': 3, 'relabel': 9}


def test_tableau_json_input():
    _, out, _ = call('tableau', '-k', '3', '1 2 0 3 2 1 0', '--format', 'json')

    assert call('word', '-k', '3', out.strip())[1] == '1 2 0 3 2 1 0\n'

    code, _, err = call('word', '-k', '4', out.strip())
    assert code == EXIT_INVALID
    assert err.startswith('error: ')


def test_phi_json():
    _, out, _ = call('phi', '-k', '3', '3,2,2,1', '--format', 'json')

    assert json.loads(out) == {'k': 3, 'word': [1, 3, 2, 0, 3, 2, 1, 0], 'window': [-3, -1, 4, 10]}


def test_kostka():
    code, out, _ = call('kostka', '-k', '2', '3', '--format', 'csv')

    assert code == EXIT_OK
    assert list(csv.reader(StringIO(out))) == [
        ['', '2,1', '1,1,1'],
        ['2,1', '1', '1'],
        ['1,1,1', '0', '1'],
    ]

    _, out, _ = call('kschur-h', '-k', '2', '3', '--format', 'json')
    assert json.loads(out)['entries'] == [[1, 0], [-1, 1]]

    _, out, _ = call('kostka', '-k', '3', '3')
    assert len(out.splitlines()) == 4


def test_hasse():
    _, out, _ = call('hasse', '-k', '2', '2')
    assert out == '- -> 1\n1 -> 1,1\n1 -> 2\n'

    _, out, _ = call('hasse', '-k', '2', '2', '--format', 'json')
    assert json.loads(out) == {
        'k': 2,
        'nodes': [[], [1], [1, 1], [2]],
        'edges': [[[], [1]], [[1], [1, 1]], [[1], [2]]],
    }

    _, out, _ = call('hasse', '-k', '2', '2', '--format', 'dot')
    assert 'strict digraph k2_young_lattice {' in out


def test_rowadders():
    code, out, err = call('rowadders', '-k', '2', '2', '3,1')

    assert code == EXIT_OK
    assert out == '2,1\n'
    assert err == '1 cells\n'


@pytest.mark.parametrize('given', [
    ('partition-to-core', '-k', '0', '1'),
    ('partition-to-core', '-k', '2', '3'),
    ('partition-to-core', '-k', '2', '1,2'),
    ('core-to-partition', '-k', '2', '2,1'),
    ('core-to-partition', '-k', '3', '{"k":4,"shape":[2]}'),
    ('covers', '-k', '2', '2,1', '--format', 'csv'),
    ('hasse', '-k', '2', '-1'),
    ('kostka', '-k', '2', '-1'),
    ('peel', '-k', '2', '2,2', '-'),
    ('word', '-k', '3', SEMISTANDARD_1),
    ('word', '-k', '3', '2,1'),
    ('tableau', '-k', '2', '0 0'),
    ('check', '--only', 'nonexistent'),
])
def test_invalid_input(given):
    code, out, err = call(*given)

    assert code == EXIT_INVALID
    assert out == ''
    assert err.startswith('error: ')


def test_unknown_command():
    code, _, err = call('frobnicate', '-k', '2')

    assert code == EXIT_UNKNOWN_COMMAND
    assert err == 'error: unknown command `frobnicate`\n'


def test_usage_errors():
    assert call('kconjugate', '2,1')[0] == 2
    assert call('--version')[0] == 0


def test_check():
    code, out, _ = call('check', '--n', '3', '--k', '2')

    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[-1].endswith('passed')

    passed, total = lines[-1].split()[0].split('/')
    assert passed == total
    assert 'FAILED' not in out


def test_check_json():
    code, out, _ = call('check', '--n', '3', '--k', '2', '--only', 'maps', '--only', 'coxeter', '--format', 'json')

    assert code == EXIT_OK

    data = json.loads(out)
    assert [suite['alias'] for suite in data['suites']] == ['maps', 'coxeter']
    assert data['passed'] == data['total'] > 0


def test_check_failure(monkeypatch):
    from kcore.base_check import CheckResult

    def run_checks(n, k, only):
        result = CheckResult('maps')
        result.failures.append('broken')
        return [result]

    monkeypatch.setattr('kcore.cli.run_checks', run_checks)

    code, out, _ = call('check')

    assert code == EXIT_FAILED
    assert '  FAILED broken' in out
    assert out.splitlines()[-1] == '0/1 passed'


def test_parse_core():
    assert parse_core('2,1', 3) == Core(Partition((2, 1)), 3)
    assert parse_core('{"k": 3, "shape": [2, 1]}', 3) == Core(Partition((2, 1)), 3)

    with pytest.raises(CoreError):
        parse_core('2,1', 2)

    with pytest.raises(KcoreValueError):
        parse_core('{"k": 3}', 3)


def test_parse_tableau():
    t = parse_tableau(STANDARD_B, 3)

    assert t.rows == ((1, 2, 3, 4, 5, 7), (4, 5, 7), (6,), (7,))
    assert parse_tableau(json.dumps(t.to_dict()), 3) == t

    with pytest.raises(TableauError):
        parse_tableau('2,1', 3)
