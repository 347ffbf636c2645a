"""Command line interface.

Every command is a subclass of Command. Its name is the lowercased class name unless
overridden, and it is found by scanning Command's subclasses, so adding a command only
means defining a class. Output goes to stdout and is byte-identical across identical
invocations; diagnostics go to stderr through logging.

Exit codes: 0 on success, 1 when a command with a verdict gives a negative one and
--strict is set, 2 for usage and input errors.
"""

import argparse
import logging
import sys
from collections import namedtuple

from monotonic import monotonic

from cxscheme.common import classproperty, dotdict, subclasses
from cxscheme.constructions import (
	example_base,
	hilbert_family,
	hilbert_intermediate,
	triple,
	unrealizable_example,
)
from cxscheme.enumeration import EnumerationSpec, enumerate_schemes
from cxscheme.moves import SearchLimitExceeded, SearchOutcome, swap, swap_search
from cxscheme.notation import dumps, parse_viro, print_viro, scheme_to_dict
from cxscheme.proof import example_3_4_trace, prove
from cxscheme.scheme import (
	SchemeError,
	OvalPath,
	check_theorem_1_1,
	stats,
	validate,
)
from cxscheme.settings import Settings


log = logging.getLogger(__name__)

exit_codes = dotdict(
	OK = 0,
	NEGATIVE = 1,
	USAGE = 2,
)


class UsageError(SchemeError):
	def __init__(self, message):
		self.message = message
		super(UsageError, self).__init__(message)
	def __str__(self):
		return self.message


Result = namedtuple('Result', 'data text verdict')


def format_fields(fields, align=False):
	"""Render (key, value) pairs as "key: value" lines, optionally aligned on the values"""
	width = max(len(key) for key, value in fields) if align else 0
	lines = []
	for key, value in fields:
		if value is True or value is False:
			value = 'yes' if value else 'no'
		elif value is None:
			value = '-'
		lines.append('{}:{} {}'.format(key, ' ' * (width - len(key)), value))
	return '\n'.join(lines)


def format_lambdas(lambdas):
	return 'p+={} p-={} n+={} n-={}'.format(*lambdas)


def format_inequality(lhs, rhs, margin, holds):
	return '{} {} {} {} (margin {})'.format(lhs, '>=' if holds else '<', rhs, 'PASS' if holds else 'FAIL', margin)


def report_fields(report):
	return [
		('left', format_inequality(report.left_lhs, report.left_rhs, report.left_margin, report.left_holds)),
		('right', format_inequality(report.right_lhs, report.right_rhs, report.right_margin, report.right_holds)),
	]


def report_data(scheme, report):
	data = {'degree': scheme.degree, 'l': scheme.l}
	data.update(report._asdict())
	return data


class Command(object):
	"""Base of all commands. Subclasses set help, may set takes_scheme (the scheme is then
	read from --scheme, --scheme-file or stdin and passed to execute), may add arguments,
	and implement execute() returning a Result. A verdict of None means the command has none.
	"""

	help = None
	takes_scheme = False

	def __init__(self, args, settings, stdin=None):
		self.args = args
		self.settings = settings
		self.stdin = stdin

	@classproperty
	def name(cls):
		return cls.__name__.lower()

	@classmethod
	def add_arguments(cls, parser):
		pass

	def read_scheme(self):
		args = self.args
		if args.scheme is not None:
			text = args.scheme
		elif args.scheme_file is not None:
			try:
				with open(args.scheme_file) as f:
					text = f.read()
			except (IOError, OSError) as ex:
				raise UsageError("Cannot read scheme file: {}".format(ex))
		else:
			stdin = sys.stdin if self.stdin is None else self.stdin
			text = stdin.read()
		if args.degree is None:
			raise UsageError("--degree is required to read a scheme")
		return parse_viro(text.strip(), args.degree)

	def run(self):
		if self.takes_scheme:
			return self.execute(self.read_scheme())
		return self.execute()

	def execute(self, *args):
		raise NotImplementedError


class Parse(Command):
	help = "print the canonical notation of a scheme"
	takes_scheme = True

	def execute(self, scheme):
		return Result(scheme_to_dict(scheme), print_viro(scheme), not validate(scheme))


class Stats(Command):
	help = "print the counts of a valid scheme"
	takes_scheme = True

	def execute(self, scheme):
		info = stats(scheme)
		data = info._asdict()
		data['lambdas'] = info.lambdas._asdict()
		text = format_fields([
			('degree', info.degree),
			('l', info.l),
			('r', info.r),
			('g', info.g),
			('k', info.k),
			('s', info.s),
			('lambdas', format_lambdas(info.lambdas)),
		])
		return Result(data, text, None)


class Check(Command):
	help = "check both complex orientation inequalities"
	takes_scheme = True

	def execute(self, scheme):
		report = check_theorem_1_1(scheme)
		lambdas = stats(scheme).lambdas
		data = report_data(scheme, report)
		data['lambdas'] = lambdas._asdict()
		text = format_fields([
			('scheme', print_viro(scheme)),
			('degree', scheme.degree),
			('k', report.k),
			('s', report.s),
			('lambdas', format_lambdas(lambdas)),
		] + report_fields(report) + [
			('verdict', 'PASS' if report.both_hold else 'FAIL'),
		])
		return Result(data, text, report.both_hold)


class Construct(Command):
	help = "build a member of the Hilbert family, or a tripled scheme"

	@classmethod
	def add_arguments(cls, parser):
		parser.add_argument('kind', choices=['hilbert', 'triple'])
		parser.add_argument('--p', type=int, help="family index")
		parser.add_argument('--intermediate', action='store_true',
		                    help="hilbert: build the intermediate curve of degree 4p+1")

	def execute(self):
		args = self.args
		if args.kind == 'hilbert':
			if args.p is None:
				raise UsageError("construct hilbert needs --p")
			state = hilbert_intermediate(args.p) if args.intermediate else hilbert_family(args.p)
			lambdas = stats(state.scheme).lambdas
			text = format_fields([
				('degree', state.degree),
				('scheme', print_viro(state.scheme)),
				('l', state.scheme.l),
				('encirclers', state.encirclers),
				('crossing', state.crossing_sign.value),
				('crossing_points', state.crossing_points),
				('lambda_minus_disk', state.lambda_minus_disk),
				('lambdas', format_lambdas(lambdas)),
			])
			return Result(state.as_dict(), text, None)
		if args.p is not None:
			base = example_base(args.p)
		elif args.scheme is not None or args.scheme_file is not None:
			base = self.read_scheme()
		else:
			raise UsageError("construct triple needs --p or a scheme")
		scheme = triple(base)
		return Result(scheme_to_dict(scheme), print_viro(scheme), None)


class Example(Command):
	help = "build the unrealizable degree 12p-3 example"

	@classmethod
	def add_arguments(cls, parser):
		parser.add_argument('--p', type=int, required=True)

	def execute(self):
		scheme, report = unrealizable_example(self.args.p)
		lambdas = stats(scheme).lambdas
		data = dotdict(degree=scheme.degree, l=scheme.l, left_margin=report.left_margin, right_margin=report.right_margin)
		for key, value in report._asdict().items():
			data.setdefault(key, value)
		data['lambdas'] = lambdas._asdict()
		data['scheme'] = print_viro(scheme)
		text = format_fields([
			('degree', scheme.degree),
			('l', scheme.l),
			('lambdas', format_lambdas(lambdas)),
		] + report_fields(report) + [
			('scheme', print_viro(scheme)),
		])
		return Result(data, text, None)


class Swap(Command):
	help = "swap a parallel pair of ovals"
	takes_scheme = True

	@classmethod
	def add_arguments(cls, parser):
		parser.add_argument('--path', required=True, help="dot-separated indices of the outer oval, eg. 1.0")

	def execute(self, scheme):
		result = swap(scheme, OvalPath.parse(self.args.path))
		return Result(scheme_to_dict(result), print_viro(result), None)


class SwapSearch(Command):
	name = 'swap-search'
	help = "search the swap orbit for a scheme satisfying both inequalities"
	takes_scheme = True

	@classmethod
	def add_arguments(cls, parser):
		parser.add_argument('--max-states', type=int, default=None)

	def execute(self, scheme):
		try:
			outcome = swap_search(scheme, max_states=self.args.max_states, settings=self.settings)
		except SearchLimitExceeded as ex:
			log.warning(str(ex))
			data = {'status': 'limit-exceeded', 'explored': ex.explored}
			return Result(data, format_fields([('status', 'limit-exceeded'), ('explored', ex.explored)]), False)
		data = outcome.as_dict()
		moves = None
		if outcome.moves:
			moves = ' '.join(str(move) for move in outcome.moves)
		text = format_fields([
			('status', outcome.status),
			('distance', outcome.distance),
			('explored', outcome.explored),
			('moves', moves),
			('scheme', data['scheme']),
		])
		return Result(data, text, outcome.status != SearchOutcome.UNREACHABLE)


class Enumerate(Command):
	help = "list all schemes with a given number of ovals"

	@classmethod
	def add_arguments(cls, parser):
		parser.add_argument('--ovals', type=int, required=True)
		group = parser.add_mutually_exclusive_group()
		group.add_argument('--valid-only', action='store_true')
		group.add_argument('--violating-left', action='store_true')
		group.add_argument('--violating-right', action='store_true')

	def execute(self):
		args = self.args
		spec = EnumerationSpec(
			args.ovals,
			degree = args.degree,
			valid_only = args.valid_only,
			violating_left = args.violating_left,
			violating_right = args.violating_right,
		)
		data = []
		lines = []
		for entry in enumerate_schemes(spec, settings=self.settings):
			text = print_viro(entry.scheme)
			lines.append(text)
			report = entry.report
			data.append({
				'scheme': text,
				'valid': entry.valid,
				'left_margin': None if report is None else report.left_margin,
				'right_margin': None if report is None else report.right_margin,
			})
		return Result(data, '\n'.join(lines), None)


class Prove(Command):
	help = "verify the integer contradiction for k = 1 .. K"

	@classmethod
	def add_arguments(cls, parser):
		parser.add_argument('--k-max', type=int, required=True)

	def execute(self):
		report = prove(self.args.k_max)
		lines = ['elimination: {}'.format('; '.join(report.elimination))]
		for row in report.rows:
			lines.append('k={k} value={contradiction_value} candidates={candidates} feasible={feasible} chain_bound={chain_bound}'.format(**row))
		lines.append('verdict: {}'.format('PASS' if report.verdict else 'FAIL'))
		return Result(report, '\n'.join(lines), report.verdict)


class Trace34(Command):
	name = 'trace-3-4'
	help = "arithmetic trace of the argument against J u 9- u 1-<1+<1->>"

	def execute(self):
		trace = example_3_4_trace()
		text = format_fields(list(trace.items()), align=True)
		return Result(trace, text, trace.contradiction)


def commands():
	"""Maps {name: Command subclass}"""
	return {cls.name: cls for cls in subclasses(Command)}


def build_parser():
	common = argparse.ArgumentParser(add_help=False)
	common.add_argument('--degree', type=int, default=None)
	source = common.add_mutually_exclusive_group()
	source.add_argument('--scheme', default=None, help="scheme in Viro notation")
	source.add_argument('--scheme-file', default=None, help="file holding a scheme in Viro notation")
	common.add_argument('--format', choices=['text', 'json'], default='text')
	common.add_argument('--strict', action='store_true', help="exit 1 on a negative verdict")
	common.add_argument('--verbose', action='store_true', help="debug logging on stderr")

	parser = argparse.ArgumentParser(prog='cxscheme', description="Complex schemes of plane real curves")
	subparsers = parser.add_subparsers(dest='command')
	subparsers.required = True
	for name, cls in sorted(commands().items()):
		subparser = subparsers.add_parser(name, parents=[common], help=cls.help)
		cls.add_arguments(subparser)
	return parser


def run(argv, stdin=None, settings=None):
	"""Run a command line. Returns (exit code, output text)."""
	parser = build_parser()
	try:
		args = parser.parse_args(argv)
	except SystemExit as ex:
		return (exit_codes.USAGE if ex.code else exit_codes.OK), ''
	package_log = logging.getLogger('cxscheme')
	previous_level = package_log.level
	if args.verbose:
		package_log.setLevel(logging.DEBUG)

	started = monotonic()
	try:
		if settings is None:
			settings = Settings.from_environ()
		command = commands()[args.command](args, settings, stdin=stdin)
		result = command.run()
		output = dumps(result.data) if args.format == 'json' else result.text
		log.debug("Command {} finished in {:.3f}s".format(args.command, monotonic() - started))
	except (SchemeError, ValueError) as ex:
		log.error(str(ex))
		return exit_codes.USAGE, ''
	except RecursionError:
		log.error("Scheme is nested too deeply to process")
		return exit_codes.USAGE, ''
	finally:
		package_log.setLevel(previous_level)

	if args.strict and result.verdict is False:
		return exit_codes.NEGATIVE, output
	return exit_codes.OK, output


def main(argv=None):
	logging.basicConfig(stream=sys.stderr, level=logging.WARNING, format='%(levelname)s %(name)s: %(message)s')
	code, output = run(sys.argv[1:] if argv is None else argv)
	if output:
		sys.stdout.write(output + '\n')
	sys.exit(code)


if __name__ == '__main__':
	main()
