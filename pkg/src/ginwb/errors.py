"""Exception types shared across the package."""


class GinwbError(Exception):
    """Base class; the CLI turns these into structured error reports."""

    code = "error"


class ArityMismatch(GinwbError, ValueError):
    code = "arity_mismatch"


class ZeroPolynomial(GinwbError, ValueError):
    code = "zero_polynomial"


class SingularMatrix(GinwbError, ValueError):
    code = "singular_matrix"


class NotHomogeneous(GinwbError, ValueError):
    code = "not_homogeneous"


class DegreeBoundExceeded(GinwbError, ValueError):
    code = "degree_bound_exceeded"


class NotRegularSequence(GinwbError):
    code = "not_regular_sequence"


class DisagreementAcrossTrials(GinwbError):
    code = "disagreement_across_trials"


class InfeasibleState(GinwbError):
    code = "infeasible_state"


class CheckFailure(GinwbError, AssertionError):
    code = "check_failure"


class ParseError(GinwbError, ValueError):
    code = "parse_error"

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
