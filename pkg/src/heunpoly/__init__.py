"""Exact series and polynomial solutions of the Heun equation.

The equation is split as (F(D) + P) y = 0 with D = x d/dx, F diagonal on
monomials and P graded away from degree zero; series solutions follow from
iterating -F(D)^-1 P from an indicial monomial, and polynomial solutions
from descending runs that terminate.  All core arithmetic is exact
rational; every candidate is re-verified by substitution into the original
equation and can be cross-checked numerically.
"""

from .errors import (
    ConstraintNotSatisfiedError,
    DegenerateParametersError,
    DegreeUnsupportedError,
    HeunpolyError,
    IncompatibleOffsetsError,
    InvalidParamsError,
    IrrationalRootError,
    PreconditionViolatedError,
    RationalFormatError,
    ResonanceError,
    SingularIntervalError,
    UnknownCaseError,
)
from .heun import (
    ALL_CASES,
    CASE_ASCENDING,
    CASE_EXTENDED,
    CASE_I,
    CASE_II,
    CASE_JACOBI,
    ConstraintCheck,
    Decomposition,
    HeunParams,
    QConstraintResult,
    SolutionReport,
    build_decomposition,
    build_jacobi_decomposition,
    case_polynomial_reports,
    check_constraints,
    derive_q_constraint,
    find_polynomial_solutions,
    indicial_roots,
    iterate_ansatz,
    polynomial_form_operator,
    solve_descending,
    solve_series,
    verify_residual,
)
from .operators import (
    DiagonalOp,
    DiffOp,
    DiffOpTerm,
    IrrationalRootPair,
    conjugate,
    diag_eval,
    diag_invert_apply,
    grade_decompose,
    op_apply,
    term_apply,
)
from .oracles import (
    QSpectrum,
    frobenius_coefficients,
    jacobi_reference,
    numeric_check,
    q_spectrum,
    rational_poly_roots,
)
from .rational import Scalar, format_rational, parse_rational, rational_sqrt
from .series import OffsetSeries, series_combine, series_sum

__version__ = "0.1.0"

__all__ = [
    "ALL_CASES",
    "CASE_ASCENDING",
    "CASE_EXTENDED",
    "CASE_I",
    "CASE_II",
    "CASE_JACOBI",
    "ConstraintCheck",
    "ConstraintNotSatisfiedError",
    "Decomposition",
    "DegenerateParametersError",
    "DegreeUnsupportedError",
    "DiagonalOp",
    "DiffOp",
    "DiffOpTerm",
    "HeunParams",
    "HeunpolyError",
    "IncompatibleOffsetsError",
    "InvalidParamsError",
    "IrrationalRootError",
    "IrrationalRootPair",
    "OffsetSeries",
    "PreconditionViolatedError",
    "QConstraintResult",
    "QSpectrum",
    "RationalFormatError",
    "ResonanceError",
    "Scalar",
    "SingularIntervalError",
    "SolutionReport",
    "UnknownCaseError",
    "build_decomposition",
    "build_jacobi_decomposition",
    "case_polynomial_reports",
    "check_constraints",
    "conjugate",
    "derive_q_constraint",
    "diag_eval",
    "diag_invert_apply",
    "find_polynomial_solutions",
    "format_rational",
    "frobenius_coefficients",
    "grade_decompose",
    "indicial_roots",
    "iterate_ansatz",
    "jacobi_reference",
    "numeric_check",
    "op_apply",
    "parse_rational",
    "polynomial_form_operator",
    "q_spectrum",
    "rational_poly_roots",
    "rational_sqrt",
    "series_combine",
    "series_sum",
    "solve_descending",
    "solve_series",
    "term_apply",
    "verify_residual",
]
