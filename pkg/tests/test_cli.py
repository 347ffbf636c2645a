import io
import json
import logging

import pytest

from cxscheme.cli import commands, exit_codes, main, run
from cxscheme.settings import Settings

from helpers import NEST_SCHEME


CHECK_NEST_SCHEME = """\
scheme: J u 9- u 1-<1+<1->>
degree: 9
k: 4
s: 8
lambdas: p+=0 p-=11 n+=1 n-=0
left: 1 < 2 FAIL (margin -1)
right: 12 >= 2 PASS (margin 10)
verdict: FAIL"""

STATS_NEST_SCHEME = """\
degree: 9
l: 12
r: 13
g: 28
k: 4
s: 8
lambdas: p+=0 p-=11 n+=1 n-=0"""

HILBERT_7 = """\
degree: 7
scheme: J u 1-<5- u 9+>
l: 15
encirclers: 1
crossing: +
crossing_points: 14
lambda_minus_disk: 5
lambdas: p+=0 p-=1 n+=9 n-=5"""

PROVE_2 = """\
elimination: n <= floor((g+r+1)/2); r1 <= n1 = n - n0; r0 = r - r1 >= n0 + (r-g-1)/2 = n0 - s
k=1 value=-6 candidates=1 feasible=0 chain_bound=2
k=2 value=-4 candidates=6 feasible=0 chain_bound=3
verdict: PASS"""


def test_command_names():
	assert sorted(commands()) == [
		'check', 'construct', 'enumerate', 'example', 'parse',
		'prove', 'stats', 'swap', 'swap-search', 'trace-3-4',
	]


def test_check():
	assert run(['check', '--degree', '9', '--scheme', NEST_SCHEME]) == (exit_codes.OK, CHECK_NEST_SCHEME)
	assert run(['check', '--degree', '9', '--scheme', NEST_SCHEME, '--strict']) == (exit_codes.NEGATIVE, CHECK_NEST_SCHEME)
	code, output = run(['check', '--degree', '9', '--scheme', 'J u 9- u 1+<1-<1->>', '--strict'])
	assert code == exit_codes.OK
	assert output.endswith('verdict: PASS')


def test_check_json():
	code, output = run(['check', '--degree', '9', '--scheme', NEST_SCHEME, '--format', 'json'])
	data = json.loads(output)
	assert data['left_margin'] == -1
	assert data['right_lhs'] == 12
	assert data['lambdas'] == {'lp_plus': 0, 'lp_minus': 11, 'ln_plus': 1, 'ln_minus': 0}
	assert ' ' not in output.replace(NEST_SCHEME, '')


def test_stats():
	assert run(['stats', '--degree', '9', '--scheme', NEST_SCHEME]) == (exit_codes.OK, STATS_NEST_SCHEME)


def test_parse_stdin():
	assert run(['parse', '--degree', '3'], stdin=io.StringIO('J u 1-\n')) == (exit_codes.OK, 'J u 1-')
	code, output = run(['parse', '--degree', '3', '--format', 'json'], stdin=io.StringIO('J'))
	assert output == '{"degree":3,"pseudoline":true,"ovals":[]}'
	assert run(['parse', '--degree', '3', '--strict'], stdin=io.StringIO('J'))[0] == exit_codes.NEGATIVE


def test_scheme_file(tmp_path):
	path = tmp_path / 'scheme.txt'
	path.write_text(NEST_SCHEME + '\n')
	assert run(['parse', '--degree', '9', '--scheme-file', str(path)]) == (exit_codes.OK, NEST_SCHEME)
	assert run(['parse', '--degree', '9', '--scheme-file', str(tmp_path / 'missing')]) == (exit_codes.USAGE, '')


def test_swap():
	assert run(['swap', '--degree', '9', '--scheme', NEST_SCHEME, '--path', '1']) == (exit_codes.OK, 'J u 9- u 1+<1-<1->>')
	assert run(['swap', '--degree', '9', '--scheme', NEST_SCHEME, '--path', '1.0']) == (exit_codes.OK, 'J u 9- u 1-<1-<1+>>')
	assert run(['swap', '--degree', '9', '--scheme', NEST_SCHEME, '--path', '0'])[0] == exit_codes.USAGE
	assert run(['swap', '--degree', '9', '--scheme', NEST_SCHEME, '--path', 'x'])[0] == exit_codes.USAGE


def test_swap_search():
	code, output = run(['swap-search', '--degree', '9', '--scheme', NEST_SCHEME, '--format', 'json'])
	assert code == exit_codes.OK
	assert output == '{"status":"reached","explored":3,"distance":1,"moves":[[1]],"scheme":"J u 9- u 1+<1-<1->>"}'
	code, output = run(['swap-search', '--degree', '9', '--scheme', 'J u 12-', '--strict'])
	assert code == exit_codes.NEGATIVE
	assert output == 'status: unreachable\ndistance: -\nexplored: 1\nmoves: -\nscheme: -'


def test_swap_search_limit():
	argv = ['swap-search', '--degree', '9', '--scheme', NEST_SCHEME, '--strict']
	assert run(argv + ['--max-states', '1']) == (exit_codes.NEGATIVE, 'status: limit-exceeded\nexplored: 2')
	assert run(argv, settings=Settings(MAX_STATES=1))[0] == exit_codes.NEGATIVE


def test_construct_hilbert():
	assert run(['construct', 'hilbert', '--p', '2']) == (exit_codes.OK, HILBERT_7)
	code, output = run(['construct', 'hilbert', '--p', '2', '--intermediate', '--format', 'json'])
	data = json.loads(output)
	assert data['degree'] == 9
	assert len(data['tags']) == 28
	assert run(['construct', 'hilbert'])[0] == exit_codes.USAGE
	assert run(['construct', 'hilbert', '--p', '1'])[0] == exit_codes.USAGE


def test_construct_triple():
	assert run(['construct', 'triple', '--degree', '3', '--scheme', 'J u 1+']) == (exit_codes.OK, 'J u 9- u 1+<1+<1->>')
	assert run(['construct', 'triple', '--p', '1']) == (exit_codes.OK, NEST_SCHEME)
	assert run(['construct', 'triple'])[0] == exit_codes.USAGE


def test_example():
	code, output = run(['example', '--p', '2', '--format', 'json'])
	assert code == exit_codes.OK
	assert output.startswith('{"degree":21,"l":94,"left_margin":-1,"right_margin":82,')
	code, output = run(['example', '--p', '1'])
	assert 'left: 1 < 2 FAIL (margin -1)' in output.splitlines()
	assert output.splitlines()[-1] == 'scheme: ' + NEST_SCHEME


def test_enumerate():
	assert run(['enumerate', '--ovals', '1', '--degree', '3']) == (exit_codes.OK, 'J u 1-\nJ u 1+')
	code, output = run(['enumerate', '--ovals', '1', '--degree', '3', '--format', 'json'])
	assert json.loads(output) == [
		{'scheme': 'J u 1-', 'valid': True, 'left_margin': 0, 'right_margin': 0},
		{'scheme': 'J u 1+', 'valid': True, 'left_margin': 1, 'right_margin': -1},
	]
	assert run(['enumerate', '--ovals', '1', '--degree', '3', '--violating-right']) == (exit_codes.OK, 'J u 1+')
	assert run(['enumerate', '--ovals', '20'])[0] == exit_codes.USAGE
	assert run(['enumerate', '--ovals', '2', '--valid-only', '--violating-left'])[0] == exit_codes.USAGE


def test_enumerate_default_degree():
	code, output = run(['enumerate', '--ovals', '2', '--format', 'json'])
	assert all(entry['valid'] for entry in json.loads(output))


def test_prove():
	assert run(['prove', '--k-max', '2', '--strict']) == (exit_codes.OK, PROVE_2)
	data = json.loads(run(['prove', '--k-max', '3', '--format', 'json'])[1])
	assert data['verdict'] is True
	assert len(data['rows']) == 3


def test_trace():
	code, output = run(['trace-3-4'])
	fields = dict(line.split(':', 1) for line in output.splitlines())
	assert fields['forced'].strip() == '33'
	assert fields['budget'].strip() == '27'
	assert fields['contradiction'].strip() == 'yes'
	assert output.splitlines()[0] == 'degree:        9'
	data = json.loads(run(['trace-3-4', '--format', 'json'])[1])
	assert data['gabard'] == 21


def test_deterministic():
	argv = ['example', '--p', '3', '--format', 'json']
	assert run(argv) == run(argv)


def test_usage_errors():
	assert run([]) == (exit_codes.USAGE, '')
	assert run(['frobnicate']) == (exit_codes.USAGE, '')
	assert run(['check', '--bogus']) == (exit_codes.USAGE, '')
	assert run(['check', '--scheme', NEST_SCHEME]) == (exit_codes.USAGE, '')
	assert run(['check', '--degree', '9', '--scheme', 'J u 9-<'])[0] == exit_codes.USAGE
	assert run(['stats', '--degree', '3', '--scheme', 'J'])[0] == exit_codes.USAGE
	assert run(['check', '--degree', '8', '--scheme', '1-'])[0] == exit_codes.USAGE


def test_main(capsys):
	with pytest.raises(SystemExit) as excinfo:
		main(['swap', '--degree', '9', '--scheme', NEST_SCHEME, '--path', '1'])
	assert excinfo.value.code == 0
	assert capsys.readouterr().out == 'J u 9- u 1+<1-<1->>\n'


def alternating_nest(signs):
	return 'J u ' + ''.join('1{}<'.format(sign) for sign in signs[:-1]) + '1' + signs[-1] + '>' * (len(signs) - 1)


def test_deep_nest():
	signs = ['-+'[index % 2] for index in range(2000)]
	text = alternating_nest(signs)
	assert run(['parse', '--degree', '65', '--scheme', text]) == (exit_codes.OK, text)
	swapped = list(signs)
	swapped[999], swapped[1000] = signs[1000], signs[999]
	path = '.'.join(['0'] * 1000)
	assert run(['swap', '--degree', '65', '--scheme', text, '--path', path]) == (exit_codes.OK, alternating_nest(swapped))
	# paths still recursive underneath report an input error instead of raising
	assert run(['construct', 'triple', '--degree', '65', '--scheme', text]) == (exit_codes.USAGE, '')
	assert run(['parse', '--degree', '65', '--scheme', text, '--format', 'json'])[0] in (exit_codes.OK, exit_codes.USAGE)


def test_bad_environment(monkeypatch):
	monkeypatch.setenv('CXSCHEME_MAX_STATES', 'lots')
	assert run(['prove', '--k-max', '1']) == (exit_codes.USAGE, '')
	monkeypatch.setenv('CXSCHEME_MAX_STATES', '²')
	assert run(['prove', '--k-max', '1']) == (exit_codes.USAGE, '')


def test_verbose_restores_log_level():
	package_log = logging.getLogger('cxscheme')
	before = package_log.level
	assert run(['stats', '--degree', '9', '--scheme', NEST_SCHEME, '--verbose'])[0] == exit_codes.OK
	assert package_log.level == before
	assert run(['stats', '--degree', '3', '--scheme', 'J', '--verbose'])[0] == exit_codes.USAGE
	assert package_log.level == before
