from hypothesis import strategies as st

from cxscheme.scheme import ComplexScheme, OvalNode, Sign, genus


NEST_SCHEME = 'J u 9- u 1-<1+<1->>'

signs = st.sampled_from([Sign.NEGATIVE, Sign.POSITIVE])

nodes = st.recursive(
	st.builds(OvalNode, signs),
	lambda children: st.builds(OvalNode, signs, st.lists(children, min_size=1, max_size=3)),
	max_leaves=6,
)

forests = st.lists(nodes, max_size=4)


@st.composite
def odd_schemes(draw, max_degree=9):
	"""Schemes of odd degree with their pseudoline, not necessarily valid.
	The degree is always one whose notation can list the drawn ovals (l <= g+1),
	going above max_degree only when no smaller degree can."""
	ovals = draw(forests)
	l = sum(oval.size for oval in ovals)
	degrees = [degree for degree in range(3, max_degree + 1, 2) if genus(degree) + 1 >= l]
	if not degrees:
		degree = max_degree + 2
		while genus(degree) + 1 < l:
			degree += 2
		degrees = [degree]
	return ComplexScheme(draw(st.sampled_from(degrees)), True, ovals)
