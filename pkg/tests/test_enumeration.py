import itertools

import pytest

from cxscheme.enumeration import (
	EnumerationLimit,
	EnumerationSpec,
	default_degree,
	enumerate_forests,
	enumerate_schemes,
	lambda_counts_oracle,
)
from cxscheme.notation import InvalidNotation, parse_viro, print_viro
from cxscheme.scheme import (
	PreconditionError,
	ComplexScheme,
	LambdaCounts,
	OvalNode,
	Sign,
	canonicalize,
	genus,
	lambda_counts,
)
from cxscheme.settings import Settings

from helpers import NEST_SCHEME


def ordered_forests(n):
	"""Every ordered signed forest with n ovals, duplicates included"""
	if n == 0:
		yield ()
		return
	for size in range(1, n + 1):
		for children in ordered_forests(size - 1):
			for sign in Sign:
				for rest in ordered_forests(n - size):
					yield (OvalNode(sign, children),) + rest


def naive_count(n):
	return len({canonicalize(ComplexScheme(3, True, ovals)) for ovals in ordered_forests(n)})


@pytest.mark.parametrize('l, count', [(0, 1), (1, 2), (2, 7), (3, 26)])
def test_counts(l, count):
	assert len(list(enumerate_forests(l))) == count


@pytest.mark.parametrize('l', range(6))
def test_counts_match_naive(l):
	assert len(list(enumerate_forests(l))) == naive_count(l)


@pytest.mark.parametrize('l', range(7))
def test_canonical_and_strictly_increasing(l):
	keys = []
	for ovals in enumerate_forests(l):
		scheme = ComplexScheme(3, True, ovals)
		assert canonicalize(scheme) == scheme
		keys.append(scheme.key)
	assert all(a < b for a, b in zip(keys, keys[1:]))


@pytest.mark.parametrize('l', range(6))
def test_print_is_injective(l):
	texts = [print_viro(ComplexScheme(3, True, ovals)) for ovals in enumerate_forests(l)]
	assert len(set(texts)) == len(texts)


@pytest.mark.parametrize('l, degree', list(itertools.product(range(7), (3, 5, 7, 9))))
def test_oracle_and_round_trip(l, degree):
	for ovals in enumerate_forests(l):
		scheme = ComplexScheme(degree, True, ovals)
		assert lambda_counts_oracle(scheme) == lambda_counts(scheme)
		if l <= genus(degree) + 1:
			assert parse_viro(print_viro(scheme), degree) == scheme
		else:
			with pytest.raises(InvalidNotation):
				parse_viro(print_viro(scheme), degree)


def test_oracle_values():
	assert lambda_counts_oracle(parse_viro(NEST_SCHEME, 9)) == LambdaCounts(0, 11, 1, 0)
	assert lambda_counts_oracle(parse_viro('J', 3)) == LambdaCounts(0, 0, 0, 0)


def test_ceiling():
	with pytest.raises(EnumerationLimit):
		enumerate_forests(9)
	with pytest.raises(EnumerationLimit):
		enumerate_forests(3, settings=Settings(MAX_OVALS=2))
	with pytest.raises(ValueError):
		enumerate_forests(-1)


def test_default_degree():
	assert default_degree(0) == 5
	assert default_degree(1) == 3
	assert default_degree(2) == 5
	assert default_degree(12) == 9
	for l in range(20):
		degree = default_degree(l)
		assert degree % 2 == 1
		assert genus(degree) >= l
		assert (genus(degree) - l) % 2 == 0


def test_violating_left_contains_scheme_1():
	spec = EnumerationSpec(12, degree=9, violating_left=True)
	texts = []
	for entry in enumerate_schemes(spec):
		assert entry.valid
		assert entry.left_holds is False
		texts.append(print_viro(entry.scheme))
	assert NEST_SCHEME in texts
	# every oval is good, so each sign is fixed by its depth
	assert len(texts) == 12486


def test_violating_right():
	spec = EnumerationSpec(4, degree=5, violating_right=True)
	entries = list(enumerate_schemes(spec))
	assert entries
	for entry in entries:
		assert entry.right_holds is False
		assert entry.report.right_margin < 0


def test_violating_filters_agree_with_unfiltered():
	for degree in (3, 5):
		for l in range(5):
			everything = list(enumerate_schemes(EnumerationSpec(l, degree=degree)))
			for side in ('left', 'right'):
				expected = [e.scheme for e in everything if e.valid and getattr(e, side + '_holds') is False]
				spec = EnumerationSpec(l, degree=degree, **{'violating_' + side: True})
				assert [e.scheme for e in enumerate_schemes(spec)] == expected


def test_valid_only():
	for entry in enumerate_schemes(EnumerationSpec(4, degree=5, valid_only=True)):
		assert entry.valid
		assert (genus(5) - entry.scheme.l) // 2 == 1


def test_all_invalid_at_wrong_parity():
	entries = list(enumerate_schemes(EnumerationSpec(2, degree=7)))
	assert len(entries) == 7
	assert not any(entry.valid for entry in entries)
	assert all(entry.report is None for entry in entries)
	assert list(enumerate_schemes(EnumerationSpec(2, degree=7, valid_only=True))) == []


def test_even_degree():
	entries = list(enumerate_schemes(EnumerationSpec(1, degree=2)))
	assert [entry.valid for entry in entries] == [True, True]
	assert not entries[0].scheme.pseudoline
	with pytest.raises(PreconditionError):
		list(enumerate_schemes(EnumerationSpec(1, degree=2, violating_left=True)))
