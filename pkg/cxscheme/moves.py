"""Swapping of parallel ovals.

Two nested ovals of opposite signs bounding an annulus free of other ovals form a
parallel pair: the outer one has exactly one child, of the opposite sign. Reversing
both orientations gives another scheme realizable by a real pseudoholomorphic curve
of the same degree. swap_search() explores the orbit of a scheme under these swaps
looking for a scheme satisfying both complex orientation inequalities.
"""

import logging

import gevent.pool
from monotonic import monotonic

from cxscheme.notation import print_viro
from cxscheme.scheme import (
	SchemeError,
	OvalNode,
	OvalPath,
	canonicalize,
	check_theorem_1_1,
	resolve,
	sibling_groups,
)
from cxscheme.settings import Settings


class NotSwappable(SchemeError):
	def __init__(self, path, message):
		self.path = path
		self.message = message
		super(NotSwappable, self).__init__(path, message)
	def __str__(self):
		return "Ovals at {self.path} cannot be swapped: {self.message}".format(self=self)


class SearchLimitExceeded(SchemeError):
	def __init__(self, explored, limit):
		self.explored = explored
		self.limit = limit
		super(SearchLimitExceeded, self).__init__(explored, limit)
	def __str__(self):
		return "Swap orbit has more than {self.limit} states".format(self=self)


class SwapMove(object):
	"""Swap of the oval at parent_path with its only child"""
	__slots__ = 'parent_path',

	def __init__(self, parent_path):
		if not isinstance(parent_path, OvalPath):
			parent_path = OvalPath(parent_path)
		self.parent_path = parent_path

	def __eq__(self, other):
		return isinstance(other, SwapMove) and self.parent_path == other.parent_path

	def __ne__(self, other):
		return not self == other

	def __hash__(self):
		return hash(self.parent_path)

	def __str__(self):
		return str(self.parent_path)

	def __repr__(self):
		return 'SwapMove({})'.format(self.parent_path)


def is_parallel_pair(node):
	return len(node.children) == 1 and node.children[0].sign is not node.sign


def swappable_pairs(scheme):
	"""Every parallel pair of the canonical scheme, up to symmetry, in path order"""
	result = []
	# pre-order walk; each stack entry is a path prefix and the groups left to visit under it
	stack = [((), iter(enumerate(sibling_groups(canonicalize(scheme).ovals))))]
	while stack:
		prefix, groups = stack[-1]
		for index, (node, count) in groups:
			path = prefix + (index,)
			if is_parallel_pair(node):
				result.append(SwapMove(path))
			stack.append((path, iter(enumerate(sibling_groups(node.children)))))
			break
		else:
			stack.pop()
	return result


def _replace(siblings, indices, fn):
	# replace the first copy of each addressed group on the way down, then rebuild upward
	trail = []
	for index in indices:
		groups = sibling_groups(siblings)
		position = sum(count for node, count in groups[:index])
		node = groups[index][0]
		trail.append((siblings, position, node))
		siblings = node.children
	replaced = None
	for siblings, position, node in reversed(trail):
		siblings = list(siblings)
		siblings[position] = fn(node) if replaced is None else node.with_children(replaced)
		replaced = siblings
	return replaced


def _swap_pair(node):
	child, = node.children
	return OvalNode(-node.sign, [OvalNode(-child.sign, child.children)])


def swap(scheme, move):
	"""Reverse the signs of the addressed oval and its only child"""
	if not isinstance(move, SwapMove):
		move = SwapMove(move)
	scheme = canonicalize(scheme)
	node, depth = resolve(scheme, move.parent_path)
	if len(node.children) != 1:
		raise NotSwappable(move.parent_path, "the oval surrounds {} ovals, not exactly one".format(len(node.children)))
	if not is_parallel_pair(node):
		raise NotSwappable(move.parent_path, "the two ovals have the same sign")
	ovals = _replace(scheme.ovals, move.parent_path.indices, _swap_pair)
	return canonicalize(scheme.with_ovals(ovals))


class SearchOutcome(object):
	"""Result of a swap search.
		status: one of ALREADY_SATISFIES, REACHED, UNREACHABLE
		moves: list of SwapMoves leading from the start to scheme, or None if unreachable.
		       Each move's path refers to the scheme produced by the previous moves.
		scheme: the witness scheme, or None if unreachable
		explored: number of distinct schemes seen
	"""

	ALREADY_SATISFIES = 'already-satisfies'
	REACHED = 'reached'
	UNREACHABLE = 'unreachable'

	def __init__(self, status, explored, moves=None, scheme=None):
		self.status = status
		self.explored = explored
		self.moves = moves
		self.scheme = scheme

	@property
	def distance(self):
		return None if self.moves is None else len(self.moves)

	def as_dict(self):
		return {
			'status': self.status,
			'explored': self.explored,
			'distance': self.distance,
			'moves': None if self.moves is None else [list(move.parent_path) for move in self.moves],
			'scheme': None if self.scheme is None else print_viro(self.scheme),
		}

	def __repr__(self):
		return '<SearchOutcome {self.status} distance={self.distance} explored={self.explored}>'.format(self=self)


class SwapSearch(object):
	"""Breadth-first search over the swap orbit of a scheme.
	States are deduplicated by canonical form. A whole level is checked
	(concurrently, on a gevent pool) before any witness is picked, and ties between
	witnesses at the same distance are broken by their canonical notation, so the result
	does not depend on evaluation order.
	"""

	def __init__(self, scheme, max_states=None, pool_size=None, settings=None, logger=None):
		if settings is None:
			settings = Settings()
		self.start = canonicalize(scheme)
		self.max_states = settings.MAX_STATES if max_states is None else max_states
		self.pool_size = settings.SEARCH_POOL_SIZE if pool_size is None else pool_size
		if not logger:
			logger = logging.getLogger(__name__).getChild(type(self).__name__)
		self.logger = logger

	def run(self):
		started = monotonic()
		report = check_theorem_1_1(self.start)
		if report.both_hold:
			return SearchOutcome(SearchOutcome.ALREADY_SATISFIES, 1, moves=[], scheme=self.start)

		pool = gevent.pool.Pool(max(1, self.pool_size))
		routes = {self.start: ()} # maps {state: moves from start}
		level = [self.start]
		distance = 0
		while level:
			next_level = []
			for state in level:
				for move in swappable_pairs(state):
					child = swap(state, move)
					if child in routes:
						continue
					if len(routes) >= self.max_states:
						raise SearchLimitExceeded(len(routes) + 1, self.max_states)
					routes[child] = routes[state] + (move,)
					next_level.append(child)
			self.logger.debug("Level {}: {} states, {} new".format(distance, len(level), len(next_level)))
			reports = list(pool.imap(check_theorem_1_1, next_level))
			witnesses = [state for state, report in zip(next_level, reports) if report.both_hold]
			if witnesses:
				witness = min(witnesses, key=print_viro)
				self.logger.info("Found witness at distance {} after {} states in {:.3f}s".format(
					distance + 1, len(routes), monotonic() - started))
				return SearchOutcome(SearchOutcome.REACHED, len(routes), moves=list(routes[witness]), scheme=witness)
			level = next_level
			distance += 1

		self.logger.info("Swap orbit exhausted after {} states in {:.3f}s".format(len(routes), monotonic() - started))
		return SearchOutcome(SearchOutcome.UNREACHABLE, len(routes))


def swap_search(scheme, max_states=None, **kwargs):
	return SwapSearch(scheme, max_states=max_states, **kwargs).run()
