from cxscheme.common import dotdict

violations = dotdict(
	MISSING_PSEUDOLINE = 'MissingPseudoline',
	UNEXPECTED_PSEUDOLINE = 'UnexpectedPseudoline',
	HARNACK_BOUND = 'HarnackBoundExceeded',
	ODD_DEFICIT = 'OddDeficit',
)

descriptions = {
	violations.MISSING_PSEUDOLINE: "odd degree {degree} requires a pseudoline",
	violations.UNEXPECTED_PSEUDOLINE: "even degree {degree} cannot carry a pseudoline",
	violations.HARNACK_BOUND: "r={r} exceeds the Harnack bound g+1={harnack}",
	violations.ODD_DEFICIT: "g+1-r={gap} is odd, so the deficit s is not an integer",
}
