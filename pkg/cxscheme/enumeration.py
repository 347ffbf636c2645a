"""Exhaustive generation of small complex schemes.

Forests are generated as multisets over a catalog of canonical trees, so every
unordered signed forest appears exactly once and the stream is already in canonical
order (increasing ComplexScheme.key). Generation can be restricted by the number of
bad ovals (those counted in lp_plus + ln_minus) and good ovals (lp_minus + ln_plus),
which is what makes the search for violations of the orientation inequalities cheap.
"""

import bisect
import logging

import numpy as np

from cxscheme.common import match
from cxscheme.constructions import is_good
from cxscheme.scheme import (
	SchemeError,
	PreconditionError,
	ComplexScheme,
	LambdaCounts,
	OvalNode,
	Sign,
	check_theorem_1_1,
	genus,
	validate,
)
from cxscheme.settings import Settings


log = logging.getLogger(__name__)


class EnumerationLimit(SchemeError):
	def __init__(self, l, ceiling):
		self.l = l
		self.ceiling = ceiling
		super(EnumerationLimit, self).__init__(l, ceiling)
	def __str__(self):
		return "Cannot enumerate all forests with {self.l} ovals (ceiling is {self.ceiling})".format(self=self)


class _Catalog(object):
	"""Canonically sorted trees, keyed by the depth parity of their root and by limits on
	size and on their number of bad and good ovals. Entries are (node, size, bad)."""

	def __init__(self):
		self._trees = {}

	def trees(self, parity, n, bad, good):
		key = parity, n, min(bad, n), min(good, n)
		if key not in self._trees:
			entries = []
			for size in range(1, n + 1):
				for sign in (Sign.NEGATIVE, Sign.POSITIVE):
					root_bad = 0 if is_good(sign, parity) else 1
					if root_bad > bad or 1 - root_bad > good:
						continue
					for children, children_bad in self.forests(size - 1, 1 - parity, bad - root_bad, good - (1 - root_bad)):
						entries.append((OvalNode(sign, children), size, root_bad + children_bad))
			entries.sort(key=lambda entry: entry[0].sort_key)
			self._trees[key] = [entry[0].sort_key for entry in entries], entries
		return self._trees[key]

	def forests(self, n, parity, bad, good, minimum=None):
		"""Yields (nodes, bad count) for every forest of n ovals whose roots sit at this depth
		parity, in increasing canonical order. minimum is a lower bound on the first tree's sort key."""
		if n == 0:
			yield (), 0
			return
		keys, entries = self.trees(parity, n, bad, good)
		start = 0 if minimum is None else bisect.bisect_left(keys, minimum)
		for node, size, node_bad in entries[start:]:
			node_good = size - node_bad
			if size > n or node_bad > bad or node_good > good:
				continue
			for rest, rest_bad in self.forests(n - size, parity, bad - node_bad, good - node_good, node.sort_key):
				yield (node,) + rest, node_bad + rest_bad


def _forests(l, bad=None, good=None):
	catalog = _Catalog()
	for nodes, _ in catalog.forests(l, 0, l if bad is None else bad, l if good is None else good):
		yield nodes


def enumerate_forests(l, settings=None):
	"""Every unordered signed forest with l ovals, once each, in canonical order"""
	if settings is None:
		settings = Settings()
	if l < 0:
		raise ValueError("Oval count must be non-negative, got {}".format(l))
	if l > settings.MAX_OVALS:
		raise EnumerationLimit(l, settings.MAX_OVALS)
	return _forests(l)


class EnumerationSpec(object):
	"""What to enumerate: all forests with l ovals, posed at degree (with a pseudoline iff
	the degree is odd), keeping valid schemes only and/or those violating the left or
	right inequality. Without a degree, the smallest odd degree >= 3 at which l ovals can
	form a valid scheme is used."""

	def __init__(self, l, degree=None, valid_only=False, violating_left=False, violating_right=False):
		if l < 0:
			raise ValueError("Oval count must be non-negative, got {}".format(l))
		self.l = l
		self.degree = default_degree(l) if degree is None else degree
		self.valid_only = valid_only
		self.violating_left = violating_left
		self.violating_right = violating_right

	@property
	def violating(self):
		return self.violating_left or self.violating_right

	def __repr__(self):
		return '<EnumerationSpec l={self.l} degree={self.degree}>'.format(self=self)


def default_degree(l):
	degree = 3
	while genus(degree) < l or (genus(degree) - l) % 2:
		degree += 2
	return degree


class EnumeratedScheme(object):
	"""A generated scheme with its validation result and, when the inequalities apply, its report"""

	def __init__(self, scheme, violations, report):
		self.scheme = scheme
		self.violations = violations
		self.report = report

	@property
	def valid(self):
		return not self.violations

	@property
	def left_holds(self):
		return None if self.report is None else self.report.left_holds

	@property
	def right_holds(self):
		return None if self.report is None else self.report.right_holds

	def __repr__(self):
		return '<EnumeratedScheme {!r}>'.format(self.scheme)


def enumerate_schemes(spec, settings=None):
	"""Yields EnumeratedSchemes for spec, in canonical order.
	The inequality filters restrict generation to forests with few enough bad (left) or
	good (right) ovals to fail, so they are not subject to the enumeration ceiling.
	"""
	if settings is None:
		settings = Settings()
	degree = spec.degree
	reports = degree % 2 == 1 and degree > 1
	if spec.violating and not reports:
		raise PreconditionError("inequality filters need an odd degree of at least 3, got {}".format(degree))

	lifted_problems = validate(ComplexScheme(degree, degree % 2 == 1, [OvalNode(Sign.NEGATIVE)] * spec.l))
	if lifted_problems and (spec.valid_only or spec.violating):
		# validity depends only on l and the degree
		log.info("No valid schemes with l={} at degree {}".format(spec.l, degree))
		return

	if spec.violating:
		k = (degree - 1) // 2
		rhs = (spec.l - k * k + 2 * k) // 2
		bad = spec.l
		good = spec.l
		if spec.violating_left:
			bad = min(bad, rhs - 2)
		if spec.violating_right:
			good = min(good, rhs - 1)
		if bad < 0 or good < 0:
			return
		forests = _forests(spec.l, bad=bad, good=good)
	else:
		forests = enumerate_forests(spec.l, settings=settings)

	criteria = {}
	if spec.valid_only:
		criteria['valid'] = True
	if spec.violating_left:
		criteria['left_holds'] = False
	if spec.violating_right:
		criteria['right_holds'] = False

	for ovals in forests:
		scheme = ComplexScheme(degree, degree % 2 == 1, ovals)
		problems = validate(scheme)
		report = check_theorem_1_1(scheme) if reports and not problems else None
		entry = EnumeratedScheme(scheme, problems, report)
		if match(entry, **criteria):
			yield entry


def lambda_counts_oracle(scheme):
	"""Recompute LambdaCounts from an explicit containment matrix.
	Ovals are listed in pre-order, so oval i contains exactly the ovals i+1 .. i+size-1.
	The depth of an oval is the number of ovals containing it, a column sum.
	"""
	nodes = [node for node, _ in scheme.walk()]
	count = len(nodes)
	if not count:
		return LambdaCounts(0, 0, 0, 0)
	contains = np.zeros((count, count), dtype=bool)
	for index, node in enumerate(nodes):
		contains[index, index + 1:index + node.size] = True
	depths = contains.sum(axis=0)
	even = depths % 2 == 0
	positive = np.array([node.sign is Sign.POSITIVE for node in nodes])
	return LambdaCounts(
		lp_plus = int(np.sum(even & positive)),
		lp_minus = int(np.sum(even & ~positive)),
		ln_plus = int(np.sum(~even & positive)),
		ln_minus = int(np.sum(~even & ~positive)),
	)
