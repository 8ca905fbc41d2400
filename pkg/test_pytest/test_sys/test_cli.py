from pathlib import Path
import json
import os
import subprocess
import sys

import pytest


pytestmark = pytest.mark.sys

src_py_dir = Path(__file__).parents[2] / 'src_py'


def run_cli(*args):
    env = dict(os.environ)
    env['PYTHONPATH'] = os.pathsep.join(
        [str(src_py_dir), *filter(None, [env.get('PYTHONPATH')])])
    return subprocess.run([sys.executable, '-m', 'hat.seidel', *args],
                          capture_output=True,
                          text=True,
                          env=env)


def test_charpoly():
    result = run_cli('charpoly', '3*K2')
    assert result.returncode == 0
    assert result.stdout.splitlines() == ['x^3*(x-1)^3', '[0,0,0,2,0,0,1]']


def test_parse_error():
    result = run_cli('charpoly', '3*K2 +')
    assert result.returncode == 1
    assert result.stdout == ''
    assert result.stderr.startswith('error: ')


def test_realize_unknown():
    result = run_cli('realize', '4', '0', '0')
    assert result.returncode == 2


def test_realize_extended():
    result = run_cli('--json', 'realize', '27', '0', '18', '--extended')
    assert result.returncode == 0
    assert json.loads(result.stdout)['witness']['expr'] == '~(3*L(K6))'


@pytest.mark.parametrize('which', ['triple', 'thm1', 'unions', 'matching',
                                   'prop-d', 'cn', 'regular', 'line',
                                   'properties', 'necessity'])
def test_verify(which):
    result = run_cli('verify', which)
    assert result.returncode == 0


def test_verify_triple_random():
    result = run_cli('verify', 'thm1', '--random', '100',
                     '--max-vertices', '7')
    assert result.returncode == 0
    assert result.stdout.strip().endswith('passed')


def test_census(tmp_path):
    path = tmp_path / 'census.jsonl'
    result = run_cli('census', '--max-n', '6', '--jobs', '4',
                     '--out', str(path), '--audit', '3')
    assert result.returncode == 0

    lines = path.read_text().splitlines()
    footer = json.loads(lines[-1])
    assert footer == {'total': 33867, 'violations': []}
    assert sum(json.loads(i)['count'] for i in lines[:-1]) == 33867


def test_convert_round_trip():
    g6 = run_cli('convert', '--to-g6', '2*(K1 + ~(K1 + K2)) + K3')
    assert g6.returncode == 0

    e = run_cli('convert', '--to-expr', g6.stdout.strip())
    assert e.returncode == 0

    again = run_cli('convert', '--to-g6', e.stdout.strip())
    assert again.returncode == 0

    first = run_cli('charpoly', g6.stdout.strip())
    second = run_cli('charpoly', again.stdout.strip())
    assert first.stdout == second.stdout
