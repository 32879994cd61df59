"""Heun equation decompositions, series/polynomial solvers, and verification.

The equation, with regular singular points at 0, 1, c and infinity, is

    y'' + (gamma/x + delta/(x-1) + epsilon/(x-c)) y'
        + (alpha*beta*x - q - sigma/x) / (x (x-1) (x-c)) y = 0

(sigma = 0 gives the classical equation; a nonzero sigma adds the -sigma/x
numerator term).  Multiplying through by x^2 (x-1) (x-c) puts it in
polynomial form, which splits as diagonal-plus-graded in several ways:

  ascending   F = c D (D+gamma-1) - sigma, perturbation degrees {+1, +2}
  case_i      the polynomial form divided by x^2: degrees {-1, -2}
  case_ii     case_i conjugated by x^(1-gamma)
  extended    case_i conjugated by x^(1-gamma+sigma)
  jacobi      the Jacobi equation, used as a worked reference

Given a decomposition (F, P) and a root lambda of F, the iteration

    y = sum_m (-1)^m [F(D)^-1 P]^m x^lambda

resums coefficient-wise into a banded recurrence; both forms are
implemented and must agree.  Descending runs detect polynomial termination
and every candidate is re-verified by exact substitution into the original
equation, independent of the decomposition that produced it.

The conjugated cases are built by exact similarity transformation of the
case_i operator, never transcribed; transcriptions of the printed forms are
retained only as diagnostics, and derive_q_constraint mechanically solves
for the accessory parameter value that removes the obstructing 1/x
multiplication term (the ground truth for the case_ii/extended constraints).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import (
    InvalidParamsError,
    IrrationalRootError,
    PreconditionViolatedError,
    ResonanceError,
    UnknownCaseError,
)
from .operators import (
    DiagonalOp,
    DiffOp,
    IrrationalRootPair,
    bucket_action,
    conjugate,
    diag_invert_apply,
    diagonal_roots,
    grade_decompose,
    op_apply,
)
from .rational import Scalar, format_rational, parse_rational
from .series import OffsetSeries, series_combine

CASE_ASCENDING = "ascending"
CASE_I = "case_i"
CASE_II = "case_ii"
CASE_EXTENDED = "extended"
CASE_JACOBI = "jacobi"

HEUN_CASES = (CASE_ASCENDING, CASE_I, CASE_II, CASE_EXTENDED)
ALL_CASES = HEUN_CASES + (CASE_JACOBI,)


@dataclass(frozen=True)
class HeunParams:
    alpha: Scalar
    beta: Scalar
    gamma: Scalar
    delta: Scalar
    epsilon: Scalar
    q: Scalar
    c: Scalar
    sigma: Scalar = Fraction(0)

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta", "epsilon", "q", "c", "sigma"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.c == 0 or self.c == 1:
            raise InvalidParamsError(
                f"c must keep the singular points 0, 1, c distinct; got c={self.c}"
            )

    def with_q(self, q: Scalar) -> "HeunParams":
        return HeunParams(self.alpha, self.beta, self.gamma, self.delta,
                          self.epsilon, q, self.c, self.sigma)

    def to_json_dict(self) -> dict:
        return {
            name: format_rational(getattr(self, name))
            for name in ("alpha", "beta", "gamma", "delta", "epsilon", "q", "c", "sigma")
        }

    @classmethod
    def from_json_dict(cls, data) -> "HeunParams":
        return cls(**{k: parse_rational(v) for k, v in data.items()})


@dataclass(frozen=True)
class ConstraintCheck:
    name: str
    lhs: Scalar
    rhs: Scalar
    satisfied: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "lhs", Fraction(self.lhs))
        object.__setattr__(self, "rhs", Fraction(self.rhs))
        object.__setattr__(self, "satisfied", self.lhs == self.rhs)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "satisfied": self.satisfied,
        }

    @classmethod
    def from_json_dict(cls, data) -> "ConstraintCheck":
        return cls(data["name"], parse_rational(data["lhs"]), parse_rational(data["rhs"]))


@dataclass(frozen=True)
class Decomposition:
    """Split (F, P) of an equation, plus what is needed to verify candidates.

    prefactor_offset is the exponent mu of the similarity factor x^mu already
    applied (solutions of the decomposed equation are chi with y = x^mu chi);
    original is the polynomial-form operator of the untransformed equation,
    used for residual checks on full candidates.
    """

    F: DiagonalOp
    P: DiffOp
    prefactor_offset: Scalar
    case_tag: str
    original: DiffOp
    params: Optional[HeunParams] = None
    jacobi_degree: Optional[int] = None
    diagnostics: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "prefactor_offset", Fraction(self.prefactor_offset))


@dataclass(frozen=True)
class SolutionReport:
    """Outcome of one descending run: candidate, verdict, and exact evidence.

    series lives in the decomposition frame (the chi variable); solution is
    x^prefactor * series in the original variable, and residual is the exact
    result of substituting solution into the original equation.
    """

    case_tag: str
    lambda_used: Optional[Scalar]
    prefactor_offset: Scalar
    series: OffsetSeries
    solution: OffsetSeries
    is_polynomial: bool
    residual: OffsetSeries
    constraints_checked: tuple[ConstraintCheck, ...] = ()
    diagnostics: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "caseTag": self.case_tag,
            "lambdaUsed": None if self.lambda_used is None else format_rational(self.lambda_used),
            "prefactorOffset": format_rational(self.prefactor_offset),
            "series": self.series.to_json_dict(),
            "solution": self.solution.to_json_dict(),
            "isPolynomial": self.is_polynomial,
            "residual": self.residual.to_json_dict(),
            "constraintsChecked": [c.to_json_dict() for c in self.constraints_checked],
            "diagnostics": list(self.diagnostics),
        }

    @classmethod
    def from_json_dict(cls, data) -> "SolutionReport":
        return cls(
            case_tag=data["caseTag"],
            lambda_used=None if data["lambdaUsed"] is None else parse_rational(data["lambdaUsed"]),
            prefactor_offset=parse_rational(data["prefactorOffset"]),
            series=OffsetSeries.from_json_dict(data["series"]),
            solution=OffsetSeries.from_json_dict(data["solution"]),
            is_polynomial=data["isPolynomial"],
            residual=OffsetSeries.from_json_dict(data["residual"]),
            constraints_checked=tuple(
                ConstraintCheck.from_json_dict(c) for c in data["constraintsChecked"]
            ),
            diagnostics=tuple(data["diagnostics"]),
        )


@dataclass(frozen=True)
class QConstraintResult:
    """Accessory parameter forced by the similarity transformation.

    q_required cancels the 1/x multiplication term of the conjugated
    operator; leftover_low_degree maps any remaining pure-multiplication
    degrees (x^-2 and below) to their coefficients, which no choice of q can
    remove.  leftover_diagonal is the degree-0 multiplication residue (zero
    by construction, reported for completeness).
    """

    q_required: Scalar
    leftover_diagonal: Scalar
    leftover_low_degree: dict[int, Scalar]

    def to_json_dict(self) -> dict:
        return {
            "qRequired": format_rational(self.q_required),
            "leftoverDiagonal": format_rational(self.leftover_diagonal),
            "leftoverLowDegree": {
                str(d): format_rational(v) for d, v in sorted(self.leftover_low_degree.items())
            },
        }


# ---------------------------------------------------------------------------
# Decomposition builders
# ---------------------------------------------------------------------------


def _case_i_parts(p: HeunParams) -> tuple[DiagonalOp, DiffOp]:
    """Polynomial form divided by x^2: diagonal part plus degrees {-1, -2}."""
    F = DiagonalOp((p.alpha * p.beta, p.gamma + p.delta + p.epsilon - 1, Fraction(1)))
    P = DiffOp.from_terms([
        (-(1 + p.c), 1, 2),
        (-((1 + p.c) * p.gamma + p.delta * p.c + p.epsilon), 0, 1),
        (-p.q, -1, 0),
        (p.c, 0, 2),
        (p.gamma * p.c, -1, 1),
        (-p.sigma, -2, 0),
    ])
    return F, P


def _ascending_parts(p: HeunParams) -> tuple[DiagonalOp, DiffOp]:
    """Polynomial form: F = c D (D+gamma-1) - sigma, degrees {+1, +2}."""
    F = DiagonalOp((-p.sigma, p.c * (p.gamma - 1), p.c))
    P = DiffOp.from_terms([
        (-(1 + p.c), 3, 2),
        (-((1 + p.c) * p.gamma + p.delta * p.c + p.epsilon), 2, 1),
        (-p.q, 1, 0),
        (Fraction(1), 4, 2),
        (p.gamma + p.delta + p.epsilon, 3, 1),
        (p.alpha * p.beta, 2, 0),
    ])
    return F, P


def polynomial_form_operator(p: HeunParams) -> DiffOp:
    """The equation multiplied by x^2 (x-1) (x-c): the verification operator."""
    F, P = _ascending_parts(p)
    return F.as_diffop() + P


def _conjugation_offset(p: HeunParams, case_tag: str) -> Fraction:
    if case_tag == CASE_II:
        return 1 - p.gamma
    if case_tag == CASE_EXTENDED:
        return 1 - p.gamma + p.sigma
    raise UnknownCaseError(f"no similarity offset for case {case_tag!r}")


def printed_transform_parts(p: HeunParams, case_tag: str) -> tuple[DiagonalOp, DiffOp]:
    """The transformed operators as printed in the source derivation.

    Kept only for comparison against the exact conjugation; the printed
    perturbation omits any 1/x and 1/x^2 multiplication residue.
    """
    if case_tag == CASE_II:
        F = DiagonalOp((
            (1 - p.gamma) * (p.delta + p.epsilon) + p.alpha * p.beta,
            1 - p.gamma + p.delta + p.epsilon,
            Fraction(1),
        ))
        w = 2 - p.gamma
    elif case_tag == CASE_EXTENDED:
        F = DiagonalOp((
            (1 - p.gamma + p.sigma) * (p.sigma + p.delta + p.epsilon) + p.alpha * p.beta,
            2 * p.sigma + 1 - p.gamma + p.delta + p.epsilon,
            Fraction(1),
        ))
        w = 2 * (1 + p.sigma) - p.gamma
    else:
        raise UnknownCaseError(f"no printed transform for case {case_tag!r}")
    P = DiffOp.from_terms([
        (-(1 + p.c), 1, 2),
        (-(w * (1 + p.c) + p.delta * p.c + p.epsilon), 0, 1),
        (p.c, 0, 2),
        (w * p.c, -1, 1),
    ])
    return F, P


def _transform_diagnostics(p: HeunParams, case_tag: str, F: DiagonalOp, P: DiffOp) -> tuple[str, ...]:
    printed_F, printed_P = printed_transform_parts(p, case_tag)
    notes = []
    if printed_F.coeffs == F.coeffs:
        notes.append("conjugated diagonal part matches the printed transformed form")
    else:
        notes.append(
            "conjugated diagonal part differs from the printed transformed form: "
            f"got {F.to_json_list()}, printed {printed_F.to_json_list()}"
        )
    diff = P - printed_P
    if diff.is_zero():
        notes.append("conjugated perturbation matches the printed transformed form")
    else:
        notes.append(
            f"conjugated perturbation differs from the printed transformed form by: {diff}"
        )
    return tuple(notes)


def build_decomposition(params: HeunParams, case_tag: str) -> Decomposition:
    """Exact (F, P) split of the requested case.

    The conjugated cases are produced by similarity transformation of the
    case_i operator with the params' own q; diagnostics record how the
    result compares with the printed transformed forms.
    """
    original = polynomial_form_operator(params)
    if case_tag == CASE_ASCENDING:
        F, P = _ascending_parts(params)
        return Decomposition(F, P, Fraction(0), case_tag, original, params)
    if case_tag == CASE_I:
        F, P = _case_i_parts(params)
        return Decomposition(F, P, Fraction(0), case_tag, original, params)
    if case_tag in (CASE_II, CASE_EXTENDED):
        mu = _conjugation_offset(params, case_tag)
        F_i, P_i = _case_i_parts(params)
        F = F_i.shift_argument(mu)
        P = conjugate(P_i, mu)
        notes = _transform_diagnostics(params, case_tag, F, P)
        return Decomposition(F, P, mu, case_tag, original, params, diagnostics=notes)
    raise UnknownCaseError(f"unknown case {case_tag!r}; expected one of {HEUN_CASES}")


def build_jacobi_decomposition(n: int, alpha: Scalar, beta: Scalar) -> Decomposition:
    """The Jacobi equation split: F = (D-n)(D+n+alpha+beta+1), degrees {-1, -2}."""
    if n < 0:
        raise PreconditionViolatedError(f"degree must be nonnegative, got {n}")
    alpha, beta = Fraction(alpha), Fraction(beta)
    lead = Fraction(n) * (n + alpha + beta + 1)
    F = DiagonalOp((-lead, alpha + beta + 1, Fraction(1)))
    P = DiffOp.from_terms([
        (Fraction(-1), 0, 2),
        (-(beta - alpha), 0, 1),
    ])
    original = DiffOp.from_terms([
        (Fraction(1), 0, 2),
        (Fraction(-1), 2, 2),
        (beta - alpha, 0, 1),
        (-(alpha + beta + 2), 1, 1),
        (lead, 0, 0),
    ])
    return Decomposition(F, P, Fraction(0), CASE_JACOBI, original, None, jacobi_degree=n)


# ---------------------------------------------------------------------------
# Constraints
# ---------------------------------------------------------------------------


def derive_q_constraint(params: HeunParams, case_tag: str) -> QConstraintResult:
    """Solve for the q that truncates the conjugated operator's 1/x term.

    Conjugates the case_i-form operator by the case's similarity offset with
    q set to zero; since the -q/x term passes through conjugation unchanged,
    the full 1/x multiplication coefficient is linear in q and vanishes at
    q_required.  Pure multiplication residues at lower degrees are reported,
    not hidden: no single q can cancel them.
    """
    if case_tag not in (CASE_II, CASE_EXTENDED):
        raise UnknownCaseError(f"q derivation applies to case_ii/extended, not {case_tag!r}")
    mu = _conjugation_offset(params, case_tag)
    _, P_i = _case_i_parts(params.with_q(Fraction(0)))
    conj = conjugate(P_i, mu)
    q_required = conj.coefficient_of(-1, 0)
    low = {}
    for t in conj.terms:
        if t.dorder == 0 and t.xpow <= -2:
            low[t.degree] = t.coeff
    return QConstraintResult(q_required, conj.coefficient_of(0, 0), low)


def check_constraints(params: HeunParams, case_tag: str) -> list[ConstraintCheck]:
    """Evaluate every relation attached to the given case; never mutates params."""
    p = params
    fuchs = ConstraintCheck(
        "gamma+delta+epsilon = alpha+beta+1",
        p.gamma + p.delta + p.epsilon,
        p.alpha + p.beta + 1,
    )
    if case_tag in (CASE_ASCENDING, CASE_JACOBI):
        return []
    if case_tag == CASE_I:
        return [fuchs, ConstraintCheck("q = 0", p.q, Fraction(0))]
    if case_tag == CASE_II:
        return [
            fuchs,
            ConstraintCheck(
                "q = (delta*c+epsilon)*(gamma-1)",
                p.q,
                (p.delta * p.c + p.epsilon) * (p.gamma - 1),
            ),
        ]
    if case_tag == CASE_EXTENDED:
        derived = derive_q_constraint(p, CASE_EXTENDED)
        printed = (1 - p.gamma + p.sigma) * ((1 + p.c) * p.sigma + p.delta * p.c + p.epsilon)
        leftover = derived.leftover_low_degree.get(-2, Fraction(0))
        return [
            ConstraintCheck("q = printed extended formula", p.q, printed),
            ConstraintCheck("q = derived truncation constraint", p.q, derived.q_required),
            ConstraintCheck("x^-2 leftover of similarity transform = 0", leftover, Fraction(0)),
        ]
    raise UnknownCaseError(f"unknown case {case_tag!r}; expected one of {HEUN_CASES}")


# ---------------------------------------------------------------------------
# Indicial roots
# ---------------------------------------------------------------------------


def indicial_roots(d: Decomposition):
    """Both roots of F(lambda) = 0, exact, or an IrrationalRootPair marker."""
    return diagonal_roots(d.F)


# ---------------------------------------------------------------------------
# Series iteration
# ---------------------------------------------------------------------------


def _graded_buckets(d: Decomposition) -> dict[int, DiffOp]:
    buckets = grade_decompose(d.P)
    if 0 in buckets:
        raise PreconditionViolatedError("perturbation contains a degree-0 bucket")
    return buckets


def _check_root(d: Decomposition, lam) -> Fraction:
    if isinstance(lam, IrrationalRootPair):
        raise IrrationalRootError(
            "indicial root is irrational; the exact iteration cannot start there"
        )
    lam = Fraction(lam)
    if d.F(lam) != 0:
        raise PreconditionViolatedError(f"F({lam}) = {d.F(lam)} != 0: not an indicial root")
    return lam


def _recurrence(d: Decomposition, lam: Fraction, ks, buckets: dict[int, DiffOp]) -> dict[int, Fraction]:
    """Banded coefficient recurrence F(lam+k) c_k = -sum_d p_d(lam+k-d) c_(k-d).

    ks must visit indices so that every source index was computed earlier.
    A vanishing F(lam+k) with zero source is benign (c_k = 0); with nonzero
    source it is a resonance.
    """
    coeffs: dict[int, Fraction] = {0: Fraction(1)}
    for k in ks:
        src = Fraction(0)
        for deg, bucket in buckets.items():
            prev = coeffs.get(k - deg)
            if prev:
                src += prev * bucket_action(bucket, lam + k - deg)
        denom = d.F(lam + k)
        if denom == 0:
            if src != 0:
                raise ResonanceError(lam + k, "nonzero source at a root of F")
            coeffs[k] = Fraction(0)
        else:
            coeffs[k] = -src / denom
    return coeffs


def solve_series(d: Decomposition, lam, order: int) -> OffsetSeries:
    """Truncated series solution seeded at x^lam with unit coefficient.

    For ascending decompositions this is the degree-indexed resummation of
    the operator iteration up to relative degree <= order; for descending
    ones it runs down to relative degree -order (no termination detection).
    """
    lam = _check_root(d, lam)
    if order < 0:
        raise PreconditionViolatedError(f"order must be nonnegative, got {order}")
    if d.P.is_zero():
        return OffsetSeries.monomial(lam)
    buckets = _graded_buckets(d)
    degs = list(buckets)
    if all(g > 0 for g in degs):
        ks = range(1, order + 1)
    elif all(g < 0 for g in degs):
        ks = range(-1, -order - 1, -1)
    else:
        raise PreconditionViolatedError(f"mixed perturbation grading {degs}")
    coeffs = _recurrence(d, lam, ks, buckets)
    return OffsetSeries(lam, coeffs)


def iterate_ansatz(
    d: Decomposition,
    lam,
    *,
    max_rel: int | None = None,
    min_rel: int | None = None,
) -> OffsetSeries:
    """The literal operator iteration sum_m (-1)^m [F^-1 P]^m x^lam.

    Truncated to the window [min_rel, max_rel] of relative degrees; must
    agree exactly with solve_series on the shared window.
    """
    lam = _check_root(d, lam)
    degs = d.P.degrees()
    if degs and not (all(g > 0 for g in degs) or all(g < 0 for g in degs)):
        raise PreconditionViolatedError(f"mixed perturbation grading {degs}")
    if degs and all(g > 0 for g in degs) and max_rel is None:
        raise PreconditionViolatedError("ascending iteration needs max_rel")
    if degs and all(g < 0 for g in degs) and min_rel is None:
        raise PreconditionViolatedError("descending iteration needs min_rel")
    term = OffsetSeries.monomial(lam)
    total = term
    width = (max_rel if max_rel is not None else 0) - (min_rel if min_rel is not None else 0)
    for _ in range(width + 1):
        pushed = op_apply(d.P, term).restrict(min_rel, max_rel)
        if pushed.is_zero():
            return total
        term = diag_invert_apply(d.F, pushed).scale(Fraction(-1))
        total = series_combine(total, term)
    return total


# ---------------------------------------------------------------------------
# Descending polynomial search
# ---------------------------------------------------------------------------


def solve_descending(d: Decomposition, n: int, k_min: int | None = None) -> SolutionReport:
    """Descending run seeded monic at x^n, with termination detection.

    Terminates early when as many consecutive coefficients vanish as the
    deepest perturbation band (two, for every case built here): the banded
    recurrence then forces all lower coefficients to zero.  Otherwise the
    descent continues to the floor k_min (default -(n+16)), and the report
    explains that the candidate does not truncate.  The returned residual is
    always the exact substitution of the full candidate into the original
    equation.
    """
    if n != int(n) or n < 0:
        raise PreconditionViolatedError(f"seed degree must be a nonnegative integer, got {n}")
    n = int(n)
    lam = _check_root(d, Fraction(n))
    degs = d.P.degrees()
    if degs and not all(g < 0 for g in degs):
        raise PreconditionViolatedError(f"descending run requires negative degrees, got {degs}")
    if k_min is None:
        k_min = -(n + 16)
    if k_min >= 0:
        raise PreconditionViolatedError(f"k_min must be negative, got {k_min}")
    width = max((-g for g in degs), default=1)

    buckets = grade_decompose(d.P)
    coeffs: dict[int, Fraction] = {n: Fraction(1)}
    terminated = d.P.is_zero()
    stopped_resonant: Fraction | None = None
    zero_run = 0
    for k in range(n - 1, k_min - 1, -1):
        if terminated:
            break
        src = Fraction(0)
        for deg, bucket in buckets.items():
            prev = coeffs.get(k - deg)
            if prev:
                src += prev * bucket_action(bucket, Fraction(k - deg))
        denom = d.F(Fraction(k))
        if denom == 0 and src != 0:
            if any(i < 0 and v != 0 for i, v in coeffs.items()):
                # the candidate already failed to truncate; the resonant
                # continuation only limits how deep the diagnostics go
                stopped_resonant = Fraction(k)
                break
            raise ResonanceError(Fraction(k), "nonzero source at a root of F during descent")
        value = Fraction(0) if denom == 0 else -src / denom
        coeffs[k] = value
        zero_run = zero_run + 1 if value == 0 else 0
        if zero_run >= width:
            terminated = True

    chi = OffsetSeries(Fraction(0), coeffs)
    has_negative_tail = any(k < 0 and v != 0 for k, v in coeffs.items())
    is_polynomial = terminated and not has_negative_tail
    solution = chi.shift_exponents(d.prefactor_offset)
    residual = op_apply(d.original, solution)

    notes: list[str] = list(d.diagnostics)
    if terminated:
        notes.append("descent terminated: all coefficients below the last stored index vanish")
    elif stopped_resonant is not None:
        notes.append(
            f"descent stopped at exponent {format_rational(stopped_resonant)} where F vanishes "
            "with a nonzero source; the candidate does not truncate to a polynomial "
            "for these parameters"
        )
    else:
        notes.append(
            f"descent reached the floor k_min={k_min} without terminating; "
            "the candidate does not truncate to a polynomial for these parameters"
        )
    if has_negative_tail:
        notes.append("nonzero coefficients at negative exponents in the transformed frame")
    mu = Fraction(d.prefactor_offset)
    if is_polynomial and (mu.denominator != 1 or mu < 0):
        notes.append(
            f"terminating series, but the full solution carries the prefactor x^{format_rational(mu)} "
            "and is not a polynomial in x"
        )

    constraints = (
        tuple(check_constraints(d.params, d.case_tag)) if d.params is not None else ()
    )
    return SolutionReport(
        case_tag=d.case_tag,
        lambda_used=Fraction(n),
        prefactor_offset=mu,
        series=chi,
        solution=solution,
        is_polynomial=is_polynomial,
        residual=residual,
        constraints_checked=constraints,
        diagnostics=tuple(notes),
    )


# ---------------------------------------------------------------------------
# Verification and orchestration
# ---------------------------------------------------------------------------


def verify_residual(params: HeunParams, candidate: OffsetSeries) -> OffsetSeries:
    """Apply the polynomial-form equation operator to a candidate, exactly.

    Zero output means the candidate solves the original equation; an
    order-N ascending truncation leaves support only in (N, N+2].
    """
    return op_apply(polynomial_form_operator(params), candidate)


def _no_candidate_report(case_tag, constraints, mu, notes) -> SolutionReport:
    zero = OffsetSeries.zero()
    return SolutionReport(
        case_tag=case_tag,
        lambda_used=None,
        prefactor_offset=mu,
        series=zero,
        solution=zero,
        is_polynomial=False,
        residual=zero,
        constraints_checked=tuple(constraints),
        diagnostics=tuple(notes),
    )


def case_polynomial_reports(params: HeunParams, case_tag: str) -> list[SolutionReport]:
    """Descending pipeline for one case, failures folded into reports.

    Every nonnegative integer indicial root is tried, smaller first;
    irrational roots, the absence of usable roots, and resonance all become
    diagnostic reports instead of exceptions.
    """
    constraints = check_constraints(params, case_tag)
    d = build_decomposition(params, case_tag)
    unmet = [c.name for c in constraints if not c.satisfied]
    base_notes = list(d.diagnostics)
    if unmet:
        base_notes.append("unsatisfied constraints: " + "; ".join(unmet))
    roots = indicial_roots(d)
    if isinstance(roots, IrrationalRootPair):
        return [_no_candidate_report(
            case_tag, constraints, d.prefactor_offset,
            base_notes + [
                "indicial roots are irrational; reported, not iterated: "
                f"quadratic coefficients {roots.to_json_dict()['quadratic']}"
            ],
        )]
    candidates = sorted({r for r in roots if r.denominator == 1 and r >= 0})
    if not candidates:
        shown = ", ".join(format_rational(r) for r in roots)
        return [_no_candidate_report(
            case_tag, constraints, d.prefactor_offset,
            base_notes + [f"no nonnegative integer among indicial roots {{{shown}}}"],
        )]
    reports: list[SolutionReport] = []
    for root in candidates:
        try:
            report = solve_descending(d, int(root))
        except ResonanceError as exc:
            reports.append(_no_candidate_report(
                case_tag, constraints, d.prefactor_offset,
                base_notes + [
                    f"descent from degree {format_rational(root)} hit resonance at "
                    f"exponent {format_rational(exc.exponent)}"
                ],
            ))
            continue
        if unmet:
            report = SolutionReport(
                case_tag=report.case_tag,
                lambda_used=report.lambda_used,
                prefactor_offset=report.prefactor_offset,
                series=report.series,
                solution=report.solution,
                is_polynomial=report.is_polynomial,
                residual=report.residual,
                constraints_checked=report.constraints_checked,
                diagnostics=report.diagnostics
                + ("unsatisfied constraints: " + "; ".join(unmet),),
            )
        reports.append(report)
    return reports


def find_polynomial_solutions(params: HeunParams) -> list[SolutionReport]:
    """Run the descending pipeline over case_i, case_ii, extended.

    Order is deterministic: cases as listed, smaller roots first; failed
    candidates are returned as reports with diagnostics.
    """
    reports: list[SolutionReport] = []
    for case_tag in (CASE_I, CASE_II, CASE_EXTENDED):
        reports.extend(case_polynomial_reports(params, case_tag))
    return reports
