"""Constructions of separating curves at the level of complex schemes.

Hilbert family: M-curves C_d of degree d = 4p-1 (p >= 2) built around a fixed conic E
bounding a disk. Each curve has a chain of nested "encircler" ovals around E, ovals
inside the disk, ovals outside it, and one oval V crossing E at 2d points.
Passing from C_d to C_(d+2) removes V and adds d ovals in the disk, d-2 ovals
outside it, a new crossing oval, and a new encircler. The degree 4p+1 curves met
on the way are the intermediate curves.

Tripling: a curve of degree d is replaced by three nearby copies perturbed into one
curve of degree 3d. Each oval becomes three concentric ovals and the d^2 triple
points of the three pseudolines turn into d^2 new empty ovals.
"""

import logging
from collections import namedtuple

from cxscheme.notation import scheme_to_dict
from cxscheme.scheme import (
	SchemeError,
	PreconditionError,
	ComplexScheme,
	OvalNode,
	Sign,
	canonicalize,
	check_theorem_1_1,
	genus,
)


log = logging.getLogger(__name__)


class InvalidState(SchemeError):
	def __init__(self, state, message):
		self.state = state
		self.message = message
		super(InvalidState, self).__init__(state, message)
	def __str__(self):
		return "Malformed construction state {self.state!r}: {self.message}".format(self=self)


class LocationTag(namedtuple('LocationTag', 'kind index')):
	"""Where a constructed oval sits. index is only set for encirclers (0 = outermost)."""
	__slots__ = ()

	ENCIRCLER = 'encircler'
	IN_DISK = 'in-disk'
	OUTSIDE_DISK = 'outside-disk'
	CROSSING_V = 'crossing-v'

	@classmethod
	def encircler(cls, index):
		return cls(cls.ENCIRCLER, index)

	def __str__(self):
		if self.kind == self.ENCIRCLER:
			return '{}:{}'.format(self.kind, self.index)
		return self.kind

IN_DISK = LocationTag(LocationTag.IN_DISK, None)
OUTSIDE_DISK = LocationTag(LocationTag.OUTSIDE_DISK, None)
CROSSING_V = LocationTag(LocationTag.CROSSING_V, None)


class HilbertState(object):
	"""One curve of the Hilbert family, kept as its layout around the conic E:
		encircler_signs: signs of the encircler chain, outermost first. Encircler i sits
		                 at depth i, directly inside encircler i-1.
		in_disk: (negative count, positive count) of ovals in the disk. They lie inside
		         every encircler.
		outside: tuple of (level, sign, count) groups of ovals outside the disk, sitting
		         directly inside encircler number level.
		crossing: (level, sign) of the oval V crossing E.
	scheme, tags and lambda_minus_disk are derived from the layout. tags is parallel to
	the ovals of scheme in walk() order.
	"""

	def __init__(self, degree, encircler_signs, in_disk, outside, crossing):
		self.degree = degree
		self.encircler_signs = tuple(encircler_signs)
		self.in_disk = tuple(in_disk)
		self.outside = tuple(outside)
		self.crossing = tuple(crossing)
		self._scheme = None
		self._tags = None

	@property
	def encirclers(self):
		return len(self.encircler_signs)

	@property
	def lambda_minus_disk(self):
		"""Number of negative ovals in the disk"""
		return self.in_disk[0]

	@property
	def crossing_sign(self):
		return self.crossing[1]

	@property
	def crossing_points(self):
		"""V carries all intersections with the conic"""
		return 2 * self.degree

	@property
	def scheme(self):
		if self._scheme is None:
			self._build()
		return self._scheme

	@property
	def tags(self):
		if self._tags is None:
			self._build()
		return self._tags

	def _build(self):
		# a tagged tree is (node, tag, tagged children); siblings are sorted canonically,
		# the sort is stable so equal ovals keep their insertion order
		def assemble(sign, tag, tagged_children=()):
			tagged_children = sorted(tagged_children, key=lambda item: item[0].sort_key)
			return OvalNode(sign, [item[0] for item in tagged_children]), tag, tagged_children

		def level_members(level):
			members = []
			for group_level, sign, count in self.outside:
				if group_level == level:
					members += [assemble(sign, OUTSIDE_DISK)] * count
			crossing_level, crossing_sign = self.crossing
			if crossing_level == level:
				members.append(assemble(crossing_sign, CROSSING_V))
			return members

		negative, positive = self.in_disk
		inner = [assemble(Sign.NEGATIVE, IN_DISK)] * negative + [assemble(Sign.POSITIVE, IN_DISK)] * positive
		for index in reversed(range(self.encirclers)):
			children = inner + level_members(index)
			inner = [assemble(self.encircler_signs[index], LocationTag.encircler(index), children)]

		tags = []
		def collect(tagged):
			node, tag, children = tagged
			tags.append(tag)
			for child in children:
				collect(child)
		for tagged in inner:
			collect(tagged)
		self._scheme = ComplexScheme(self.degree, True, [item[0] for item in inner])
		self._tags = tuple(tags)

	def check(self):
		"""Raise InvalidState unless the layout is a member of the family"""
		degree = self.degree
		if degree < 7 or degree % 2 == 0:
			raise InvalidState(self, "degree must be odd and at least 7")
		if self.encirclers != (degree - 5) // 2:
			raise InvalidState(self, "degree {} needs {} encirclers, found {}".format(
				degree, (degree - 5) // 2, self.encirclers))
		for level, sign, count in self.outside:
			if not 0 <= level < self.encirclers:
				raise InvalidState(self, "outside group placed in missing encircler {}".format(level))
		if not 0 <= self.crossing[0] < self.encirclers:
			raise InvalidState(self, "crossing oval placed in missing encircler {}".format(self.crossing[0]))
		if self.scheme.l != genus(degree):
			raise InvalidState(self, "not an M-curve: l={}, g={}".format(self.scheme.l, genus(degree)))

	def as_dict(self):
		result = scheme_to_dict(self.scheme)
		result['tags'] = [str(tag) for tag in self.tags]
		result['lambda_minus_disk'] = self.lambda_minus_disk
		return result

	def __repr__(self):
		return '<HilbertState degree={self.degree} encirclers={self.encirclers} in_disk={self.in_disk}>'.format(self=self)


def hilbert_base():
	"""The degree 7 start of the family: one negative encircler holding a positive V,
	5 negative and 3 positive ovals in the disk, and 5 positive ovals outside it."""
	return HilbertState(
		degree = 7,
		encircler_signs = [Sign.NEGATIVE],
		in_disk = (5, 3),
		outside = [(0, Sign.POSITIVE, 5)],
		crossing = (0, Sign.POSITIVE),
	)


def hilbert_step(state):
	"""Pass from C_d to C_(d+2).
	From d = 4p-1 the new ovals are d positive ovals in the disk, d-2 negative ovals
	outside it, a negative V and a positive encircler; from d = 4p+1 all four signs are
	reversed. The new encircler becomes the innermost of the chain; the new outside
	ovals and the new V sit directly inside it, so later encirclers exclude them.
	"""
	state.check()
	degree = state.degree
	if degree % 4 == 3:
		disk_sign = Sign.POSITIVE
	else:
		disk_sign = Sign.NEGATIVE
	level = state.encirclers
	negative, positive = state.in_disk
	if disk_sign is Sign.POSITIVE:
		in_disk = (negative, positive + degree)
	else:
		in_disk = (negative + degree, positive)
	result = HilbertState(
		degree = degree + 2,
		encircler_signs = state.encircler_signs + (disk_sign,),
		in_disk = in_disk,
		outside = state.outside + ((level, -disk_sign, degree - 2),),
		crossing = (level, -disk_sign),
	)
	log.debug("Hilbert step {} -> {}: {} encirclers, in disk {}".format(
		degree, result.degree, result.encirclers, result.in_disk))
	return result


def hilbert_family(p):
	"""The M-curve C_(4p-1), p >= 2"""
	if p < 2:
		raise PreconditionError("the Hilbert family starts at p=2, got p={}".format(p))
	state = hilbert_base()
	for _ in range(2 * (p - 2)):
		state = hilbert_step(state)
	return state


def hilbert_intermediate(p):
	"""The intermediate M-curve C_(4p+1), p >= 2"""
	if p < 2:
		raise PreconditionError("the Hilbert family starts at p=2, got p={}".format(p))
	return hilbert_step(hilbert_family(p))


def is_good(sign, depth):
	"""Good ovals are the ones counted in lp_minus + ln_plus"""
	if depth % 2 == 0:
		return sign is Sign.NEGATIVE
	return sign is Sign.POSITIVE


OvalPartition = namedtuple('OvalPartition', 'good bad')

def classify_good_bad(scheme):
	"""Split the ovals of a scheme, as (node, depth) pairs in walk() order, into good and bad"""
	partition = OvalPartition([], [])
	for node, depth in canonicalize(scheme).walk():
		(partition.good if is_good(node.sign, depth) else partition.bad).append((node, depth))
	return partition


class TripleRule(object):
	"""Signs of the three concentric ovals replacing an oval of sign s, outermost first,
	given as multipliers of s: 1 keeps the sign, -1 reverses it.
	The default puts the companions of a good oval on both sides of it (s, -s, s) and
	both companions of a bad oval inside it (s, s, -s).
	"""

	def __init__(self, good=(1, -1, 1), bad=(1, 1, -1)):
		for pattern in (good, bad):
			if len(pattern) != 3 or any(factor not in (1, -1) for factor in pattern):
				raise ValueError("A triple pattern is three factors of 1 or -1, not {!r}".format(pattern))
		self.good = tuple(good)
		self.bad = tuple(bad)

	@staticmethod
	def _apply(pattern, sign):
		return [sign if factor == 1 else -sign for factor in pattern]

	def good_pattern(self, sign):
		return self._apply(self.good, sign)

	def bad_pattern(self, sign):
		return self._apply(self.bad, sign)

	def __repr__(self):
		return 'TripleRule(good={self.good}, bad={self.bad})'.format(self=self)

DEFAULT_RULE = TripleRule()


def _triple_node(node, depth, rule):
	# depth is the depth in the original scheme, which decides good or bad
	if is_good(node.sign, depth):
		outer, middle, inner = rule.good_pattern(node.sign)
	else:
		outer, middle, inner = rule.bad_pattern(node.sign)
	children = [_triple_node(child, depth + 1, rule) for child in node.children]
	return OvalNode(outer, [OvalNode(middle, [OvalNode(inner, children)])])


def triple(scheme, rule=DEFAULT_RULE):
	"""Degree 3d scheme of the perturbed union of three copies of a degree d scheme"""
	degree = scheme.degree
	if degree % 2 == 0:
		raise PreconditionError("tripling needs an odd degree, got {}".format(degree))
	if degree == 1:
		raise PreconditionError("tripling needs degree at least 3")
	if not scheme.pseudoline:
		raise PreconditionError("tripling needs the pseudoline of an odd degree scheme")
	ovals = [OvalNode(Sign.NEGATIVE)] * (degree * degree)
	ovals += [_triple_node(oval, 0, rule) for oval in scheme.ovals]
	return canonicalize(ComplexScheme(3 * degree, True, ovals))


CUBIC = ComplexScheme(3, True, [OvalNode(Sign.NEGATIVE)])


def example_base(p):
	"""The curve whose tripling gives the degree 12p-3 example: the cubic with one
	negative oval for p=1, else C_(4p-1)"""
	if p < 1:
		raise PreconditionError("p must be positive, got p={}".format(p))
	if p == 1:
		return CUBIC
	return hilbert_family(p).scheme


def unrealizable_example(p):
	"""Returns (scheme, report) for the tripled degree 12p-3 curve, whose left
	inequality fails by exactly one"""
	scheme = triple(example_base(p))
	return scheme, check_theorem_1_1(scheme)


def equality_example(p):
	"""Returns (scheme, report) for the tripled intermediate curve C_(4p+1), whose left
	inequality holds with equality"""
	scheme = triple(hilbert_intermediate(p).scheme)
	return scheme, check_theorem_1_1(scheme)
