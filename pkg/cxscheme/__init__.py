from cxscheme.scheme import (
	SchemeError,
	InvalidScheme,
	InvalidPath,
	PreconditionError,
	Sign,
	OvalNode,
	ComplexScheme,
	OvalPath,
	LambdaCounts,
	canonicalize,
	validate,
	resolve,
	depth,
	lambda_counts,
	stats,
	check_theorem_1_1,
	gabard_bound,
)
from cxscheme.violations import violations
from cxscheme.notation import InvalidNotation, InvalidDocument, parse_viro, print_viro, encode_json, decode_json
from cxscheme.constructions import (
	hilbert_base,
	hilbert_step,
	hilbert_family,
	hilbert_intermediate,
	classify_good_bad,
	triple,
	unrealizable_example,
	equality_example,
)
from cxscheme.moves import NotSwappable, SearchLimitExceeded, SwapMove, swappable_pairs, swap, swap_search
from cxscheme.enumeration import EnumerationLimit, EnumerationSpec, enumerate_forests, enumerate_schemes
from cxscheme.proof import prove, fiber_trace, example_3_4_trace
from cxscheme.settings import Settings
