"""fourn: exact decompositions of 4/n into three positive unit fractions."""

from .core import (
    Decomposition,
    FournError,
    IdentityParams,
    MaxTermsExceededError,
    UnitTriple,
    UnsolvedError,
    canonicalize,
    scale_decomposition,
    verify_triple,
)
from .identities import (
    SequenceSpec,
    eq5_general,
    eq6_corrected,
    eq7,
    eq8,
    family_4k_minus_1,
    family_6k_minus_1,
    family_8k_minus_3,
    mod3_identity,
    sequence_value,
    trivial_small_factor,
)
from .solver import (
    DEFAULT_METHOD_ORDER,
    GreedyExpansion,
    ResidueProfile,
    SolveConfig,
    classify,
    composite_reduce,
    greedy_expand,
    match_eq5,
    match_eq8,
    oracle_search,
    solve,
    solve_all,
)
from .coverage import (
    CoverageReport,
    Counterexample,
    IdentityCheck,
    ProgressionSet,
    SetExpr,
    builtin_identity_checks,
    check_set_identity,
    coverage_report,
    mordell_class,
)

__all__ = [
    "Counterexample",
    "CoverageReport",
    "Decomposition",
    "DEFAULT_METHOD_ORDER",
    "FournError",
    "GreedyExpansion",
    "IdentityCheck",
    "IdentityParams",
    "MaxTermsExceededError",
    "ProgressionSet",
    "ResidueProfile",
    "SequenceSpec",
    "SetExpr",
    "SolveConfig",
    "UnitTriple",
    "UnsolvedError",
    "builtin_identity_checks",
    "canonicalize",
    "check_set_identity",
    "classify",
    "composite_reduce",
    "coverage_report",
    "eq5_general",
    "eq6_corrected",
    "eq7",
    "eq8",
    "family_4k_minus_1",
    "family_6k_minus_1",
    "family_8k_minus_3",
    "greedy_expand",
    "match_eq5",
    "match_eq8",
    "mod3_identity",
    "mordell_class",
    "oracle_search",
    "scale_decomposition",
    "sequence_value",
    "solve",
    "solve_all",
    "trivial_small_factor",
    "verify_triple",
]

__version__ = "0.1.0"
