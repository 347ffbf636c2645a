"""Brute force verification of the integer arithmetic behind the orientation inequalities.

For a curve of degree m = 2k+1 failing one of the inequalities, write g = k(2k-1),
a = (k^2+k)/2, l = g-2s, r = l+1, and split the r components into r0 counted on the
failing side and r1 = r - r0 others. The degree n of a separating morphism and the
fiber counts n0, n1 are eliminated before iterating, using
	n <= floor((g+r+1)/2),  r1 <= n - n0,  hence r0 >= n0 - s.
What is left is the system
	count bound:   r0 <= a - s - 1
	Bezout bound:  (k-1)(2k+1) >= (a-1) + (2*r1 - 1)
over non-negative integers, which must have no solution.
"""

import logging
from collections import namedtuple

from cxscheme.common import dotdict
from cxscheme.notation import parse_viro
from cxscheme.scheme import PreconditionError, check_theorem_1_1, gabard_bound, stats


log = logging.getLogger(__name__)

ELIMINATION_STEPS = (
	'n <= floor((g+r+1)/2)',
	'r1 <= n1 = n - n0',
	'r0 = r - r1 >= n0 + (r-g-1)/2 = n0 - s',
)


class ProofParams(namedtuple('ProofParams', 'k s r0 r1')):
	"""One candidate assignment. g, a, l and r are derived from k and s."""
	__slots__ = ()

	@property
	def g(self):
		return self.k * (2 * self.k - 1)

	@property
	def a(self):
		return (self.k * self.k + self.k) // 2

	@property
	def l(self):
		return self.g - 2 * self.s

	@property
	def r(self):
		return self.l + 1


def _check_k(k):
	if k < 1:
		raise PreconditionError("k must be at least 1, got {}".format(k))


def contradiction_value(k):
	"""-k^2 + 5k - 10, which the final inequality of the chain would need to be >= 0"""
	_check_k(k)
	return -k * k + 5 * k - 10


def bezout_holds(params):
	"""The Bezout bound: the auxiliary curve of degree k-1 meets the components at most
	(k-1)(2k+1) times, yet passes through a-1 chosen points and cuts r1-1 ovals twice"""
	k = params.k
	return (k - 1) * (2 * k + 1) >= (params.a - 1) + (2 * params.r1 - 1)


def iter_assignments(k, bezout=True):
	"""Yields every ProofParams with s in [0, a-1], r0 in [0, a-s-1] (the count bound),
	r1 = g - 2s + 1 - r0 >= 0 and, if bezout, the Bezout bound.
	r1 grows as r0 decreases, so once the Bezout bound fails the smaller r0 are skipped."""
	_check_k(k)
	g = k * (2 * k - 1)
	a = (k * k + k) // 2
	for s in range(a):
		for r0 in reversed(range(a - s)):
			params = ProofParams(k=k, s=s, r0=r0, r1=g - 2 * s + 1 - r0)
			if params.r1 < 0:
				continue
			if bezout and not bezout_holds(params):
				break
			yield params


def feasible_assignments(k, bezout=True):
	return list(iter_assignments(k, bezout=bezout))


def candidate_count(k):
	"""Number of (s, r0) pairs allowed by the count bound alone"""
	a = (k * k + k) // 2
	return a * (a + 1) // 2


def chain_bound(k):
	"""Lower bound g - 2a + 3 on r1, obtained from the count bound and s <= a - 1"""
	_check_k(k)
	g = k * (2 * k - 1)
	a = (k * k + k) // 2
	return g - 2 * a + 3


def chain_slack(k):
	"""Twice the slack of the Bezout bound with r1 at its chain bound. Equals contradiction_value(k)."""
	_check_k(k)
	a = (k * k + k) // 2
	return 2 * ((k - 1) * (2 * k + 1) - ((a - 1) + (2 * chain_bound(k) - 1)))


def prove(k_max):
	"""Check the contradiction for every k in 1..k_max. Returns a dotdict report with one
	row per k and a verdict that is True iff every k gives a contradiction."""
	_check_k(k_max)
	rows = []
	for k in range(1, k_max + 1):
		feasible = sum(1 for _ in iter_assignments(k))
		row = dotdict(
			k = k,
			contradiction_value = contradiction_value(k),
			candidates = candidate_count(k),
			feasible = feasible,
			chain_bound = chain_bound(k),
		)
		log.debug("k={k}: {feasible} feasible of {candidates}".format(**row))
		rows.append(row)
	return dotdict(
		k_max = k_max,
		elimination = list(ELIMINATION_STEPS),
		rows = rows,
		verdict = all(row.feasible == 0 and row.contradiction_value < 0 for row in rows),
	)


NEST_SCHEME = 'J u 9- u 1-<1+<1->>'

def fiber_trace(scheme):
	"""Follow the argument against a scheme failing the left inequality with all ovals met
	by one fiber of a separating morphism of maximal degree:
		gabard: degree bound of the morphism
		j_points: fiber points left for the pseudoline once each oval takes one
		aux_degree, budget: degree k-1 of the auxiliary curve and its Bezout number with the curve
		oval_points, forced: the auxiliary curve cuts each oval an even number of times, so
		                     at least twice, plus the j_points on the pseudoline
	"""
	info = stats(scheme)
	if info.k is None or info.k < 1:
		raise PreconditionError("the trace needs an odd degree of at least 3")
	report = check_theorem_1_1(scheme)
	gabard = gabard_bound(info.g, info.r)
	j_points = gabard - info.l
	aux_degree = info.k - 1
	budget = aux_degree * info.degree
	oval_points = 2 * info.l
	forced = oval_points + j_points
	return dotdict(
		degree = info.degree,
		g = info.g,
		r = info.r,
		l = info.l,
		s = info.s,
		left_margin = report.left_margin,
		gabard = gabard,
		j_points = j_points,
		aux_degree = aux_degree,
		budget = budget,
		oval_points = oval_points,
		forced = forced,
		contradiction = forced > budget,
	)


def example_3_4_trace():
	"""fiber_trace() of the degree 9 scheme J u 9- u 1-<1+<1->>"""
	return fiber_trace(parse_viro(NEST_SCHEME, 9))
