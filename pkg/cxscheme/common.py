import re


class classproperty(object):
	"""Acts like @property when used as a decorator, but wrapped function is also a classmethod
	For simplicity's sake, we only implement read-only property.
	"""
	def __init__(self, fn):
		self.fn = fn
	def __get__(self, instance, cls):
		return self.fn(cls)


def subclasses(cls):
	"""Return all subclasses of cls, including subclasses of subclasses of cls, etc."""
	subs = set()
	for subcls in cls.__subclasses__():
		subs.add(subcls)
		subs |= subclasses(subcls)
	return subs


class dotdict(dict):
	def __getattr__(self, attr):
		try:
			return self[attr]
		except KeyError:
			raise AttributeError(attr)
	def __setattr__(self, attr, value):
		self[attr] = value


regex_type = type(re.compile(''))
def match(obj, **attr_args):
	"""Return True if every attribute named in attr_args matches on obj.
	The meaning of a match depends on the type of the match arg:
		string or other plain value: equality
		regex object (as returned by re.compile()): re.match() on the attribute value
		callable: function taking the attribute value and returning True or False
		list or tuple: of the above, of which at least one must match
		None: match anything
	A callable that raises is considered not to match.

	Examples:
		Match a valid scheme whose left inequality fails:
			match(entry, valid=True, left_holds=False)
		Match schemes of degree 7 or 9 with an even oval count:
			match(entry, degree=[7, 9], l=lambda l: l % 2 == 0)
	"""
	def match_value(match_spec, value):
		if match_spec is None:
			return True
		if not isinstance(match_spec, (list, tuple)):
			match_spec = [match_spec]
		for match_part in match_spec:
			if isinstance(match_part, regex_type):
				if isinstance(value, str) and match_part.match(value):
					return True
				continue
			if callable(match_part):
				try:
					if match_part(value):
						return True
				except Exception:
					pass # a failed callable means False
				continue
			if match_part == value:
				return True
		return False

	for attr, match_spec in attr_args.items():
		if not match_value(match_spec, getattr(obj, attr)):
			return False
	return True
