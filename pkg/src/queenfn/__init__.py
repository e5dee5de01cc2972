"""N-Queens solutions as piecewise modular linear maps."""

from queenfn.complete import PartialPlacement, complete, complete_via_queen_functions
from queenfn.compose import (
    CriterionReport,
    IrreducibilityClass,
    classify,
    compose,
    conjecture_applicable,
    criterion,
    generalized_compose,
    hedayat_exists,
    modular_search,
    witness,
)
from queenfn.construct import LemmaFamily, build_queen_function, dispatch, solve
from queenfn.core import (
    Arrangement,
    LinearMap,
    QueenFunction,
    Segment,
    SymmetryOp,
    apply_symmetry,
    canonical_form,
    eval_queen_function,
    materialize,
    validate,
)
from queenfn.enumeration import (
    FundamentalClass,
    check_conjecture,
    check_remark_15,
    count_solutions,
    count_with_prefix,
    enumerate_solutions,
    fundamental_classes,
)
from queenfn.width import fit_segment, min_width, orbit_min_width

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "CriterionReport",
    "FundamentalClass",
    "IrreducibilityClass",
    "LemmaFamily",
    "LinearMap",
    "PartialPlacement",
    "QueenFunction",
    "Segment",
    "SymmetryOp",
    "apply_symmetry",
    "build_queen_function",
    "canonical_form",
    "check_conjecture",
    "check_remark_15",
    "classify",
    "complete",
    "complete_via_queen_functions",
    "compose",
    "conjecture_applicable",
    "count_solutions",
    "count_with_prefix",
    "criterion",
    "dispatch",
    "enumerate_solutions",
    "eval_queen_function",
    "fit_segment",
    "fundamental_classes",
    "generalized_compose",
    "hedayat_exists",
    "materialize",
    "min_width",
    "modular_search",
    "orbit_min_width",
    "solve",
    "validate",
    "witness",
]
