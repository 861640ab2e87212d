"""Exact local algebra for resolution of singularities experiments.

Sparse polynomials over the rationals, local and global standard bases,
order and slice-sequence invariants, coefficient ideals, blowup
transforms, and a staged construction that picks blowup centers. A small
HTTP service and a command line front end expose the same operations.
"""

from .blowup import (
    Center,
    TransformResult,
    ranked_charts,
    strict_transform,
    strict_transform_via_sb,
    total_transform,
    transform,
    weak_transform,
)
from .coeff import (
    WeightedComponent,
    WeightedIdealSum,
    coeff_ideal_villamayor,
    expand_weighted,
    monomial_split,
    weighted_order,
)
from .demo import demo_report
from .errors import (
    ContextMismatchError,
    DesingError,
    DomainError,
    InputError,
    InternalError,
    NonRationalFrameError,
    ParseError,
    UnknownVariableError,
)
from .fixtures import EXAMPLE_NAMES, ex61_ideal, ex62_ideal, example_ideal
from .hybrid import (
    HybridInvariant,
    StagedBuild,
    hybrid_invariant,
    lemma_equivalence_check,
    maximal_contact_frame,
    modified_coeff_ideal,
    staged_build,
    suggest_center,
)
from .idealfile import dump_ideal_file, dumps_ideal, load_ideal_file, loads_ideal
from .ideals import (
    Ideal,
    ideal_contains,
    ideal_equals,
    ideal_member,
    is_unit_ideal,
    leading_ideal,
    normal_form,
    quotient_by_variable,
    reduced_standard_basis,
    saturate_by_variable,
    standard_basis,
)
from .invariants import (
    SliceSequence,
    delta_ideal,
    delta_iterate,
    hs_compare,
    hs_sequence,
    order_locus_ideal,
    order_of_ideal,
)
from .parsing import format_polynomial, parse_polynomial
from .rings import (
    INFINITE_ORDER,
    MonomialOrder,
    Point,
    Polynomial,
    RingContext,
    local_order,
    make_context,
    order_for,
)

__version__ = "1.0.0"
