"""Integral Khovanov homology of braid closures and signed PD diagrams."""

from .braid import (
    BraidPermutation,
    BraidWord,
    CrossingId,
    braid_closure,
    braid_permutation,
    classify_crossings,
    parse_braid,
    reduced_diagram,
)
from .cube import ChainComplex, LabeledState, build_complex, q_degree
from .diagram import Diagram, EdgeTransition, Resolution, edge_transition, from_pd, resolve
from .errors import CapExceededError, InputError, NonPositiveWordError
from .homology import BigradedGroup, SmithForm, homology_table, smith_normal_form
from .invariants import (
    LaurentPolynomial,
    VerificationReport,
    convention_toggle,
    graded_euler_characteristic,
    jones_state_sum,
    kernel_structure_check,
    reduction_consistency,
    verify_positive_braid,
)

__all__ = [
    "BigradedGroup",
    "BraidPermutation",
    "BraidWord",
    "CapExceededError",
    "ChainComplex",
    "CrossingId",
    "Diagram",
    "EdgeTransition",
    "InputError",
    "LabeledState",
    "LaurentPolynomial",
    "NonPositiveWordError",
    "Resolution",
    "SmithForm",
    "VerificationReport",
    "braid_closure",
    "braid_permutation",
    "build_complex",
    "classify_crossings",
    "convention_toggle",
    "edge_transition",
    "from_pd",
    "graded_euler_characteristic",
    "homology_table",
    "jones_state_sum",
    "kernel_structure_check",
    "parse_braid",
    "q_degree",
    "reduced_diagram",
    "reduction_consistency",
    "resolve",
    "smith_normal_form",
    "verify_positive_braid",
]

__version__ = "0.1.0"
