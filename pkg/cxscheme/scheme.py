"""Complex schemes of plane real curves: a degree, an optional pseudoline, and a
forest of signed ovals ordered by nesting.

Ovals are classified by the parity of the number of ovals surrounding them
(even -> "p", odd -> "n") and by their sign, giving the four counts
lp_plus, lp_minus, ln_plus, ln_minus.
"""

import itertools
import re
from collections import namedtuple
from enum import Enum

from cxscheme.violations import violations, descriptions


class SchemeError(Exception):
	"""Base class for every error caused by bad input to this package"""


class InvalidScheme(SchemeError):
	def __init__(self, scheme, violations):
		self.scheme = scheme
		self.violations = list(violations)
		super(InvalidScheme, self).__init__(scheme, self.violations)
	def __str__(self):
		return "Scheme {self.scheme} is not valid: {details}".format(
			self = self,
			details = '; '.join(map(str, self.violations)),
		)


class InvalidPath(SchemeError):
	def __init__(self, path, message):
		self.path = path
		self.message = message
		super(InvalidPath, self).__init__(path, message)
	def __str__(self):
		return "Path {self.path} does not resolve: {self.message}".format(self=self)


class PreconditionError(SchemeError):
	def __init__(self, message):
		self.message = message
		super(PreconditionError, self).__init__(message)
	def __str__(self):
		return self.message


class Sign(Enum):
	NEGATIVE = '-'
	POSITIVE = '+'

	def __neg__(self):
		return Sign.POSITIVE if self is Sign.NEGATIVE else Sign.NEGATIVE

	@property
	def rank(self):
		"""Sort rank among siblings: negative ovals come first"""
		return 0 if self is Sign.NEGATIVE else 1

	@classmethod
	def parse(cls, char):
		try:
			return cls(char)
		except ValueError:
			raise ValueError("Invalid sign: {!r}".format(char))


def fold_forest(roots, build):
	"""Compute build(node, built_children) for every node under roots, children first.
	Returns a dict from id(node) to its built value. Runs off an explicit stack, so
	deep nests do not hit the recursion limit. Shared subtrees are built once.
	"""
	built = {}
	stack = [(node, False) for node in roots]
	while stack:
		node, ready = stack.pop()
		if id(node) in built:
			continue
		if node.children and not ready:
			stack.append((node, True))
			stack.extend((child, False) for child in node.children)
			continue
		built[id(node)] = build(node, [built[id(child)] for child in node.children])
	return built


class OvalNode(object):
	"""An oval together with the ovals it surrounds.
	Nodes are immutable. Children keep the order they were given in; use canonical()
	(or canonicalize() on a whole scheme) to get the sorted form.
	key is a serialization of the subtree in its current order, so two nodes are equal
	iff their keys are equal. For canonical nodes the key is the canonical serialization.
	"""
	__slots__ = 'sign', 'children', 'key', 'size', '_hash'

	def __init__(self, sign, children=()):
		if not isinstance(sign, Sign):
			raise TypeError("sign must be a Sign, not {!r}".format(sign))
		self.sign = sign
		self.children = tuple(children)
		if self.children:
			self.key = '{}<{}>'.format(sign.value, ','.join(child.key for child in self.children))
		else:
			self.key = sign.value
		self.size = 1 + sum(child.size for child in self.children)
		self._hash = hash(self.key)

	@property
	def sort_key(self):
		return self.sign.rank, self.key

	def canonical(self):
		def build(node, children):
			return OvalNode(node.sign, sorted(children, key=lambda child: child.sort_key))
		return fold_forest([self], build)[id(self)]

	def with_children(self, children):
		return OvalNode(self.sign, children)

	def __hash__(self):
		return self._hash

	def __eq__(self, other):
		return self is other or (isinstance(other, OvalNode) and self.key == other.key)

	def __ne__(self, other):
		return not self == other

	def __repr__(self):
		return 'OvalNode({!r})'.format(self.key)


def genus(degree):
	return (degree - 1) * (degree - 2) // 2


class ComplexScheme(object):
	"""A complex scheme posed at a given degree.
	The degree is carried explicitly rather than inferred, since the same forest can be
	posed at several degrees; validate() cross-checks it against the pseudoline flag.
	"""
	__slots__ = 'degree', 'pseudoline', 'ovals'

	def __init__(self, degree, pseudoline, ovals=()):
		if isinstance(degree, bool) or not isinstance(degree, int) or degree < 1:
			raise ValueError("Degree must be a positive integer, not {!r}".format(degree))
		self.degree = degree
		self.pseudoline = bool(pseudoline)
		self.ovals = tuple(ovals)
		for oval in self.ovals:
			if not isinstance(oval, OvalNode):
				raise TypeError("ovals must be OvalNodes, not {!r}".format(oval))

	@property
	def l(self):
		return sum(oval.size for oval in self.ovals)

	@property
	def r(self):
		return self.l + (1 if self.pseudoline else 0)

	@property
	def genus(self):
		return genus(self.degree)

	@property
	def key(self):
		"""Total order on forests, used for deduplication and deterministic output"""
		return tuple(oval.sort_key for oval in self.ovals)

	def with_ovals(self, ovals):
		return ComplexScheme(self.degree, self.pseudoline, ovals)

	def walk(self):
		"""Yields (node, depth) for every oval, parents before children, in the stored order."""
		stack = [(oval, 0) for oval in reversed(self.ovals)]
		while stack:
			node, depth = stack.pop()
			yield node, depth
			stack.extend((child, depth + 1) for child in reversed(node.children))

	def __eq__(self, other):
		if not isinstance(other, ComplexScheme):
			return False
		return (self.degree, self.pseudoline, self.ovals) == (other.degree, other.pseudoline, other.ovals)

	def __ne__(self, other):
		return not self == other

	def __hash__(self):
		return hash((self.degree, self.pseudoline, self.ovals))

	def __repr__(self):
		return '<ComplexScheme degree={self.degree} J={self.pseudoline} [{ovals}]>'.format(
			self = self,
			ovals = ','.join(oval.key for oval in self.ovals),
		)


class OvalPath(object):
	"""Addresses an oval of a canonical scheme.
	Each index selects a group of identical siblings (one run-length item of the printed
	notation) at its level; the path then continues into the first copy of that group.
	Copies in a group are interchangeable, so anything computed through a path does not
	depend on which copy is meant.
	"""
	__slots__ = 'indices',

	def __init__(self, indices):
		indices = tuple(indices)
		if not indices:
			raise InvalidPath(indices, "an oval path needs at least one index")
		for index in indices:
			if isinstance(index, bool) or not isinstance(index, int) or index < 0:
				raise InvalidPath(indices, "indices must be non-negative integers")
		self.indices = indices

	@classmethod
	def parse(cls, text):
		"""Parse dotted indices, eg. "1.0" """
		text = text.strip()
		if not re.match(r'[0-9]+(\.[0-9]+)*\Z', text):
			raise InvalidPath(text, "expected dot-separated non-negative integers")
		return cls(int(part) for part in text.split('.'))

	def __iter__(self):
		return iter(self.indices)

	def __len__(self):
		return len(self.indices)

	def __eq__(self, other):
		return isinstance(other, OvalPath) and self.indices == other.indices

	def __ne__(self, other):
		return not self == other

	def __hash__(self):
		return hash(self.indices)

	def __str__(self):
		return '.'.join(map(str, self.indices))

	def __repr__(self):
		return 'OvalPath({})'.format(self)


def sibling_groups(nodes):
	"""Split canonically ordered siblings into runs of identical nodes.
	Returns a list of (node, count)."""
	return [(node, len(list(run))) for node, run in itertools.groupby(nodes)]


def canonicalize(scheme):
	ovals = [oval.canonical() for oval in scheme.ovals]
	ovals.sort(key=lambda oval: oval.sort_key)
	return scheme.with_ovals(ovals)


class Violation(object):
	"""One reason a scheme is not a valid separating scheme. code is one of violations.*"""
	__slots__ = 'code', 'detail'

	def __init__(self, code, **fields):
		self.code = code
		self.detail = descriptions[code].format(**fields)

	def __eq__(self, other):
		return isinstance(other, Violation) and (self.code, self.detail) == (other.code, other.detail)

	def __ne__(self, other):
		return not self == other

	def __str__(self):
		return '{self.code}: {self.detail}'.format(self=self)

	def __repr__(self):
		return '<Violation {}>'.format(self)


def validate(scheme):
	"""Returns a list of Violations, empty if the scheme is valid.
	Checked: the pseudoline is present iff the degree is odd, r <= g+1 (Harnack),
	and g+1-r is even so that the curve is an (M-2s)-curve for an integer s.
	"""
	result = []
	degree = scheme.degree
	odd = degree % 2 == 1
	if odd and not scheme.pseudoline:
		result.append(Violation(violations.MISSING_PSEUDOLINE, degree=degree))
	if not odd and scheme.pseudoline:
		result.append(Violation(violations.UNEXPECTED_PSEUDOLINE, degree=degree))
	g, r = scheme.genus, scheme.r
	if r > g + 1:
		result.append(Violation(violations.HARNACK_BOUND, r=r, harnack=g + 1))
	if (g + 1 - r) % 2:
		result.append(Violation(violations.ODD_DEFICIT, gap=g + 1 - r))
	return result


def resolve(scheme, path):
	"""Returns (node, depth) for the oval addressed by path in canonicalize(scheme)"""
	if not isinstance(path, OvalPath):
		path = OvalPath(path)
	siblings = canonicalize(scheme).ovals
	node = None
	for depth, index in enumerate(path):
		groups = sibling_groups(siblings)
		if index >= len(groups):
			raise InvalidPath(path, "level {} has only {} distinct ovals".format(depth, len(groups)))
		node, count = groups[index]
		siblings = node.children
	return node, len(path) - 1


def depth(scheme, path):
	"""Number of ovals strictly containing the addressed oval"""
	node, result = resolve(scheme, path)
	return result


LAMBDA_CLASSES = ('lp_plus', 'lp_minus', 'ln_plus', 'ln_minus')

def oval_class(sign, depth):
	"""Name of the LambdaCounts field that an oval of this sign at this depth is counted in"""
	if depth % 2 == 0:
		return 'lp_plus' if sign is Sign.POSITIVE else 'lp_minus'
	return 'ln_plus' if sign is Sign.POSITIVE else 'ln_minus'


class LambdaCounts(namedtuple('LambdaCounts', LAMBDA_CLASSES)):
	__slots__ = ()

	@classmethod
	def from_classes(cls, classes):
		"""Build from an iterable of class names as returned by oval_class()"""
		counts = dict.fromkeys(LAMBDA_CLASSES, 0)
		for name in classes:
			counts[name] += 1
		return cls(**counts)

	@property
	def total(self):
		return sum(self)


def lambda_counts(scheme):
	return LambdaCounts.from_classes(oval_class(node.sign, depth) for node, depth in scheme.walk())


SchemeStats = namedtuple('SchemeStats', 'degree l r g k s lambdas')


def _require_valid(scheme):
	problems = validate(scheme)
	if problems:
		raise InvalidScheme(scheme, problems)


def stats(scheme):
	"""All the counts of a valid scheme. k is None for even degree."""
	_require_valid(scheme)
	g = scheme.genus
	k = (scheme.degree - 1) // 2 if scheme.degree % 2 else None
	return SchemeStats(
		degree = scheme.degree,
		l = scheme.l,
		r = scheme.r,
		g = g,
		k = k,
		s = (g + 1 - scheme.r) // 2,
		lambdas = lambda_counts(scheme),
	)


Theorem11Report = namedtuple('Theorem11Report', [
	'k', 's',
	'left_lhs', 'left_rhs', 'left_margin',
	'right_lhs', 'right_rhs', 'right_margin',
	'left_holds', 'right_holds', 'both_hold',
	'deficit_rhs',
])


def check_theorem_1_1(scheme):
	"""Evaluate both complex orientation inequalities for a valid scheme of odd degree 2k+1, k > 0:
		lp_plus + ln_minus + 1 >= (l - k^2 + 2k)/2
		ln_plus + lp_minus     >= (l - k^2 + 2k)/2
	The right hand side is also computed in its deficit form (k^2 + k)/2 - s (deficit_rhs);
	the two always agree on valid schemes.
	"""
	if scheme.degree % 2 == 0:
		raise PreconditionError("the inequalities are stated for odd degree only, got degree {}".format(scheme.degree))
	if scheme.degree == 1:
		raise PreconditionError("the inequalities need k > 0, got degree 1")
	info = stats(scheme)
	k, s, lambdas = info.k, info.s, info.lambdas
	# l = g - 2s and g = k(2k-1) make the numerator even
	rhs = (info.l - k * k + 2 * k) // 2
	deficit_rhs = (k * k + k) // 2 - s
	left_lhs = lambdas.lp_plus + lambdas.ln_minus + 1
	right_lhs = lambdas.ln_plus + lambdas.lp_minus
	left_holds = left_lhs >= rhs
	right_holds = right_lhs >= rhs
	return Theorem11Report(
		k = k,
		s = s,
		left_lhs = left_lhs,
		left_rhs = rhs,
		left_margin = left_lhs - rhs,
		right_lhs = right_lhs,
		right_rhs = rhs,
		right_margin = right_lhs - rhs,
		left_holds = left_holds,
		right_holds = right_holds,
		both_hold = left_holds and right_holds,
		deficit_rhs = deficit_rhs,
	)


def gabard_bound(g, r):
	"""Maximal degree of a separating morphism guaranteed for genus g with r real components"""
	if g < 0 or r < 1:
		raise ValueError("Need g >= 0 and r >= 1, got g={}, r={}".format(g, r))
	return (g + r + 1) // 2
