import os
import re

from cxscheme.common import dotdict


class Settings(dotdict):
	"""A dict of tunable limits, with defaults for anything not set explicitly.
		MAX_OVALS: ceiling on l for unrestricted enumeration.
		MAX_STATES: default state budget of the swap search.
		SEARCH_POOL_SIZE: number of greenlets checking one search level.
	"""

	defaults = {
		'MAX_OVALS': 8,
		'MAX_STATES': 1000000,
		'SEARCH_POOL_SIZE': 8,
	}

	ENV_PREFIX = 'CXSCHEME_'

	def __getitem__(self, item):
		if item in self:
			return super(Settings, self).__getitem__(item)
		return self.defaults[item]

	@classmethod
	def from_environ(cls, environ=None):
		"""Build settings from CXSCHEME_<KEY> variables. Unknown keys are ignored,
		values must be non-negative integers."""
		if environ is None:
			environ = os.environ
		result = cls()
		for key in cls.defaults:
			value = environ.get(cls.ENV_PREFIX + key)
			if value is None or value == '':
				continue
			if not re.match(r'[0-9]+\Z', value):
				raise ValueError("Invalid value for {}{}: {!r}".format(cls.ENV_PREFIX, key, value))
			result[key] = int(value)
		return result
