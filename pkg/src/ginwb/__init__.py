"""Revlex generic initial ideals of Artinian complete intersections.

Exact rational arithmetic throughout: polynomials, truncated Groebner bases,
Gin by random coordinate changes, Hilbert functions, Lefschetz checks, the
determinant criterion for the degree-d piece and a Lefschetz-guided
reconstruction of candidate Gins.
"""

__version__ = "0.1.0"

from .algebra import (
    ChangeOfCoordinates,
    Monomial,
    Ordering,
    Polynomial,
    apply_coordinate_change,
    enumerate_degree_monomials,
    leading_monomial,
    revlex_compare,
)
from .criterion import (
    b_matrix,
    cauchy_binet_delta,
    coefficient_matrix,
    evaluate_criterion,
    g_coefficient,
    g_matrix,
    specialization_checks,
)
from .errors import (
    ArityMismatch,
    CheckFailure,
    DegreeBoundExceeded,
    DisagreementAcrossTrials,
    GinwbError,
    InfeasibleState,
    NotHomogeneous,
    NotRegularSequence,
    ParseError,
    SingularMatrix,
    ZeroPolynomial,
)
from .gin import GinResult, compute_gin, random_change
from .groebner import GroebnerBasis, buchberger_truncated, initial_ideal, normal_form
from .hilbert import HilbertTable, ci_hilbert, ci_table, hilbert_from_ideal, series_oracle
from .lefschetz import GradedQuotient, LefschetzVerdict, check_lefschetz, is_semiregular, multiplication_matrix
from .monomial_ideal import (
    MonomialIdeal,
    borel_closure,
    graded_piece,
    is_revlex_segment,
    is_strongly_stable,
    shadow,
)
from .parse import parse_polynomial, parse_polynomials
from .reconstruct import ReconstructionState, lefschetz_feasible, reconstruct

__all__ = [
    "apply_coordinate_change",
    "ArityMismatch",
    "b_matrix",
    "borel_closure",
    "buchberger_truncated",
    "cauchy_binet_delta",
    "ChangeOfCoordinates",
    "check_lefschetz",
    "CheckFailure",
    "ci_hilbert",
    "ci_table",
    "coefficient_matrix",
    "compute_gin",
    "DegreeBoundExceeded",
    "DisagreementAcrossTrials",
    "enumerate_degree_monomials",
    "evaluate_criterion",
    "g_coefficient",
    "g_matrix",
    "GinResult",
    "GinwbError",
    "graded_piece",
    "GradedQuotient",
    "GroebnerBasis",
    "hilbert_from_ideal",
    "HilbertTable",
    "InfeasibleState",
    "initial_ideal",
    "is_revlex_segment",
    "is_semiregular",
    "is_strongly_stable",
    "leading_monomial",
    "lefschetz_feasible",
    "LefschetzVerdict",
    "specialization_checks",
    "Monomial",
    "MonomialIdeal",
    "multiplication_matrix",
    "normal_form",
    "NotHomogeneous",
    "NotRegularSequence",
    "Ordering",
    "parse_polynomial",
    "parse_polynomials",
    "ParseError",
    "Polynomial",
    "random_change",
    "reconstruct",
    "ReconstructionState",
    "revlex_compare",
    "series_oracle",
    "shadow",
    "SingularMatrix",
    "ZeroPolynomial",
]
