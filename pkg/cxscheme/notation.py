"""ASCII Viro notation and JSON for complex schemes.

Text grammar:
	scheme := "0" | "J" | "J" sep items | items
	items  := item (sep item)*
	sep    := whitespace "u" whitespace
	item   := COUNT SIGN | COUNT SIGN "<" items ">"
COUNT is a positive integer written in ASCII digits and SIGN is "+" or "-". An item
with a count n stands for n disjoint identical copies. A scheme of degree d lists at
most g+1 ovals, g = (d-1)(d-2)/2; text implying more is rejected while parsing.
For example the degree 9 scheme with nine empty ovals beside a nest of three is
	J u 9- u 1-<1+<1->>
"""

import json
import logging

from cxscheme.scheme import (
	SchemeError,
	ComplexScheme,
	OvalNode,
	Sign,
	canonicalize,
	fold_forest,
	sibling_groups,
	validate,
)


log = logging.getLogger(__name__)


class InvalidNotation(SchemeError):
	def __init__(self, text, position, message):
		self.text = text
		self.position = position
		self.message = message
		super(InvalidNotation, self).__init__(text, position, message)
	def __str__(self):
		return "Notation {self.text!r} could not be parsed at position {self.position}: {self.message}".format(self=self)


class InvalidDocument(SchemeError):
	def __init__(self, data, message):
		self.data = data
		self.message = message
		super(InvalidDocument, self).__init__(data, message)
	def __str__(self):
		return "Document could not be decoded: {self.message}".format(self=self)


EMPTY = '0'
PSEUDOLINE = 'J'
SEPARATOR = ' u '
DIGITS = '0123456789'


def parse_viro(text, degree, logger=None):
	"""Parse notation text into a canonical, fully expanded scheme of the given degree.
	The pseudoline is present iff the text starts with "J". A mismatch between the
	pseudoline and the degree parity is not a parse error, it is logged as a warning
	(as is every other validation problem). Text implying more than g+1 ovals raises
	InvalidNotation.
	"""
	if logger is None:
		logger = log
	pos = [0]

	def fail(message, at=None):
		raise InvalidNotation(text, pos[0] if at is None else at, message)

	def peek():
		return text[pos[0]] if pos[0] < len(text) else ''

	def at_end():
		return pos[0] >= len(text)

	def skip_space():
		start = pos[0]
		while not at_end() and text[pos[0]].isspace():
			pos[0] += 1
		return pos[0] > start

	def try_separator():
		# consumes "<ws>u<ws>" and returns True, or consumes nothing and returns False
		start = pos[0]
		if skip_space() and peek() == 'u':
			pos[0] += 1
			if skip_space():
				return True
			fail("expected whitespace after separator 'u'")
		pos[0] = start
		return False

	def parse_head():
		# COUNT SIGN, returned with the position the count started at
		start = pos[0]
		while not at_end() and text[pos[0]] in DIGITS:
			pos[0] += 1
		if pos[0] == start:
			fail("expected an oval count")
		count = int(text[start:pos[0]])
		if count == 0:
			fail("oval count must be positive", at=start)
		if count > limit:
			fail("oval count exceeds g+1 = {} for degree {}".format(limit, degree), at=start)
		char = peek()
		if char not in ('+', '-'):
			fail("expected a sign '+' or '-'")
		pos[0] += 1
		return count, Sign(char), start

	def add(siblings, size, node, count, start):
		size += count * node.size
		if size > limit:
			fail("more than g+1 = {} ovals for degree {}".format(limit, degree), at=start)
		siblings += [node] * count
		return size

	def parse_items():
		# open brackets are kept on an explicit stack, so nesting depth is not
		# limited by the interpreter's recursion limit
		stack = []
		siblings, size = [], 0
		while True:
			count, sign, start = parse_head()
			if peek() == '<':
				pos[0] += 1
				stack.append((count, sign, start, siblings, size))
				siblings, size = [], 0
				continue
			size = add(siblings, size, OvalNode(sign), count, start)
			while not try_separator():
				if not stack:
					return siblings
				if peek() != '>':
					fail("expected '>' or separator")
				pos[0] += 1
				count, sign, start, outer, outer_size = stack.pop()
				node = OvalNode(sign, siblings)
				siblings, size = outer, add(outer, outer_size, node, count, start)

	if not isinstance(text, str):
		raise TypeError("notation must be a string, not {!r}".format(text))
	# an empty scheme of this degree checks the degree before any parsing
	limit = ComplexScheme(degree, False).genus + 1
	skip_space()
	pseudoline = False
	ovals = []
	if text.strip() == EMPTY:
		pos[0] = len(text)
	elif peek() == PSEUDOLINE:
		pos[0] += 1
		pseudoline = True
		if try_separator():
			ovals = parse_items()
	elif at_end():
		fail("empty notation (use '0' for the empty scheme)")
	else:
		ovals = parse_items()
	skip_space()
	if not at_end():
		fail("unexpected {!r}".format(peek()))

	scheme = canonicalize(ComplexScheme(degree, pseudoline, ovals))
	for problem in validate(scheme):
		logger.warning("Parsed scheme {!r} at degree {}: {}".format(text, degree, problem))
	return scheme


def _format_items(nodes):
	def join(siblings, bodies):
		# bodies line up with siblings, the first copy in a group stands for all of it
		items, index = [], 0
		for node, count in sibling_groups(siblings):
			item = '{}{}'.format(count, node.sign.value)
			if node.children:
				item += '<{}>'.format(bodies[index])
			items.append(item)
			index += count
		return SEPARATOR.join(items)

	bodies = fold_forest(nodes, lambda node, children: join(node.children, children))
	return join(nodes, [bodies[id(node)] for node in nodes])


def print_viro(scheme):
	"""Canonical notation: canonical child order, identical siblings merged into one
	counted item, "J" first when the pseudoline is present, "0" for the empty scheme."""
	scheme = canonicalize(scheme)
	parts = []
	if scheme.pseudoline:
		parts.append(PSEUDOLINE)
	if scheme.ovals:
		parts.append(_format_items(scheme.ovals))
	return SEPARATOR.join(parts) if parts else EMPTY


def node_to_dict(node):
	def build(node, children):
		return {'sign': node.sign.value, 'children': children}
	return fold_forest([node], build)[id(node)]


def scheme_to_dict(scheme):
	"""Plain data form of the canonical scheme, fully expanded"""
	scheme = canonicalize(scheme)
	return {
		'degree': scheme.degree,
		'pseudoline': scheme.pseudoline,
		'ovals': [node_to_dict(oval) for oval in scheme.ovals],
	}


def dumps(data):
	"""Compact, key-order preserving JSON used for every document this package writes"""
	return json.dumps(data, separators=(',', ':'))


def encode_json(scheme):
	return dumps(scheme_to_dict(scheme))


def _check_fields(data, expected, what):
	if not isinstance(data, dict):
		raise InvalidDocument(data, "{} must be an object".format(what))
	unknown = set(data) - set(expected)
	if unknown:
		raise InvalidDocument(data, "unknown fields in {}: {}".format(what, ', '.join(sorted(unknown))))
	missing = set(expected) - set(data)
	if missing:
		raise InvalidDocument(data, "missing fields in {}: {}".format(what, ', '.join(sorted(missing))))


def node_from_dict(data):
	_check_fields(data, ('sign', 'children'), 'oval')
	if data['sign'] not in ('+', '-'):
		raise InvalidDocument(data, "sign must be '+' or '-', not {!r}".format(data['sign']))
	if not isinstance(data['children'], list):
		raise InvalidDocument(data, "children must be an array")
	return OvalNode(Sign(data['sign']), [node_from_dict(child) for child in data['children']])


def scheme_from_dict(data):
	_check_fields(data, ('degree', 'pseudoline', 'ovals'), 'scheme')
	degree = data['degree']
	if isinstance(degree, bool) or not isinstance(degree, int) or degree < 1:
		raise InvalidDocument(data, "degree must be a positive integer, not {!r}".format(degree))
	if not isinstance(data['pseudoline'], bool):
		raise InvalidDocument(data, "pseudoline must be a boolean")
	if not isinstance(data['ovals'], list):
		raise InvalidDocument(data, "ovals must be an array")
	ovals = [node_from_dict(oval) for oval in data['ovals']]
	return canonicalize(ComplexScheme(degree, data['pseudoline'], ovals))


def decode_json(text):
	try:
		data = json.loads(text)
	except ValueError as ex:
		raise InvalidDocument(text, "not valid JSON: {}".format(ex))
	return scheme_from_dict(data)
