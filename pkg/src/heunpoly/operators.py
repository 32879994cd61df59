"""Differential operators acting exactly on formal monomial series.

An operator is a finite sum of terms coeff * x^a (d/dx)^b.  Its action on a
single monomial is elementary:

    x^a d^b x^mu = [mu (mu-1) ... (mu-b+1)] x^(mu+a-b)

so every term maps x^mu to a multiple of x^(mu+degree) with degree = a - b.
That integer grading (defined by [D, O] = degree * O with D = x d/dx) is what
makes the whole solver work: operators split into buckets of fixed degree,
and each bucket acts on a series as a scalar function of the exponent plus a
shift.  Diagonal operators -- polynomials F(D) -- act without any shift and
can be inverted coefficient-by-coefficient wherever F does not vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import DegreeUnsupportedError, ResonanceError
from .rational import Scalar, falling_factorial, format_rational
from .series import OffsetSeries


@dataclass(frozen=True)
class DiffOpTerm:
    coeff: Scalar
    xpow: int
    dorder: int

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        object.__setattr__(self, "xpow", int(self.xpow))
        object.__setattr__(self, "dorder", int(self.dorder))
        if self.dorder < 0:
            raise ValueError(f"derivative order must be nonnegative, got {self.dorder}")

    @property
    def degree(self) -> int:
        return self.xpow - self.dorder

    def __str__(self) -> str:
        return f"{format_rational(self.coeff)}*x^{self.xpow}*d^{self.dorder}"


def term_apply(term: DiffOpTerm, exponent: Scalar) -> tuple[Scalar, Scalar] | None:
    """Apply one term to x^exponent.

    Returns (factor, new_exponent), or None exactly when the falling
    factorial mu (mu-1) ... (mu-b+1) vanishes (mu a nonnegative integer
    below the derivative order).
    """
    mu = Fraction(exponent)
    factor = term.coeff * falling_factorial(mu, term.dorder)
    if factor == 0:
        return None
    return factor, mu + term.degree


@dataclass(frozen=True)
class DiffOp:
    terms: tuple[DiffOpTerm, ...] = ()

    def __post_init__(self):
        merged: dict[tuple[int, int], Fraction] = {}
        for t in self.terms:
            if not isinstance(t, DiffOpTerm):
                t = DiffOpTerm(*t)
            key = (t.xpow, t.dorder)
            merged[key] = merged.get(key, Fraction(0)) + t.coeff
        normal = tuple(
            DiffOpTerm(c, x, d)
            for (x, d), c in sorted(merged.items())
            if c != 0
        )
        object.__setattr__(self, "terms", normal)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_terms(cls, triples: Iterable[tuple[Scalar, int, int]]) -> "DiffOp":
        return cls(tuple(DiffOpTerm(c, x, d) for c, x, d in triples))

    @classmethod
    def zero(cls) -> "DiffOp":
        return cls(())

    # -- algebra -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "DiffOp") -> "DiffOp":
        return DiffOp(self.terms + other.terms)

    def __sub__(self, other: "DiffOp") -> "DiffOp":
        return self + other.scale(Fraction(-1))

    def scale(self, factor: Scalar) -> "DiffOp":
        factor = Fraction(factor)
        return DiffOp(tuple(DiffOpTerm(factor * t.coeff, t.xpow, t.dorder) for t in self.terms))

    def shift_xpow(self, k: int) -> "DiffOp":
        """Left-multiply by x^k."""
        return DiffOp(tuple(DiffOpTerm(t.coeff, t.xpow + k, t.dorder) for t in self.terms))

    def degrees(self) -> list[int]:
        return sorted({t.degree for t in self.terms})

    def coefficient_of(self, xpow: int, dorder: int) -> Scalar:
        for t in self.terms:
            if t.xpow == xpow and t.dorder == dorder:
                return t.coeff
        return Fraction(0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(str(t) for t in self.terms)


def op_apply(op: DiffOp, s: OffsetSeries) -> OffsetSeries:
    """Linear extension of term_apply over all terms and stored coefficients."""
    out: dict[int, Fraction] = {}
    for k, coeff in s.coeffs.items():
        mu = s.offset + k
        for t in op.terms:
            hit = term_apply(t, mu)
            if hit is None:
                continue
            factor, _ = hit
            idx = k + t.degree
            out[idx] = out.get(idx, Fraction(0)) + coeff * factor
    return OffsetSeries(s.offset, out)


def grade_decompose(op: DiffOp) -> dict[int, DiffOp]:
    """Split an operator into buckets of fixed degree xpow - dorder."""
    buckets: dict[int, list[DiffOpTerm]] = {}
    for t in op.terms:
        buckets.setdefault(t.degree, []).append(t)
    return {d: DiffOp(tuple(ts)) for d, ts in sorted(buckets.items())}


def bucket_action(bucket: DiffOp, mu: Scalar) -> Scalar:
    """Scalar action of a single-degree bucket: bucket(x^mu) = action * x^(mu+d)."""
    mu = Fraction(mu)
    total = Fraction(0)
    for t in bucket.terms:
        total += t.coeff * falling_factorial(mu, t.dorder)
    return total


def conjugate(op: DiffOp, mu: Scalar) -> DiffOp:
    """Similarity transform x^-mu . op . x^mu, expanded to normal form.

    Uses d^b x^mu = x^mu * sum_j C(b,j) [mu]_j x^-j d^(b-j) with [mu]_j the
    falling factorial, so exponents may be arbitrary rationals.  Satisfies
    op_apply(conjugate(op, mu), p) == x^-mu * op_apply(op, x^mu * p).
    """
    mu = Fraction(mu)
    out: list[DiffOpTerm] = []
    for t in op.terms:
        for j in range(t.dorder + 1):
            coeff = t.coeff * comb(t.dorder, j) * falling_factorial(mu, j)
            if coeff != 0:
                out.append(DiffOpTerm(coeff, t.xpow - j, t.dorder - j))
    return DiffOp(tuple(out))


@dataclass(frozen=True)
class DiagonalOp:
    """Polynomial F(D) in D = x d/dx; acts on x^mu as multiplication by F(mu)."""

    coeffs: tuple[Scalar, ...]

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, mu: Scalar) -> Scalar:
        return diag_eval(self, mu)

    def shift_argument(self, mu: Scalar) -> "DiagonalOp":
        """F(D + mu) as a polynomial in D (exact binomial expansion)."""
        mu = Fraction(mu)
        out = [Fraction(0)] * len(self.coeffs)
        for n, a in enumerate(self.coeffs):
            for k in range(n + 1):
                out[k] += a * comb(n, k) * mu ** (n - k)
        return DiagonalOp(tuple(out))

    def add_constant(self, value: Scalar) -> "DiagonalOp":
        cs = list(self.coeffs) or [Fraction(0)]
        cs[0] += Fraction(value)
        return DiagonalOp(tuple(cs))

    def as_diffop(self) -> DiffOp:
        """Expand sum a_n D^n into x^k d^k normal form.

        Uses the recursion D . (x^k d^k) = k x^k d^k + x^(k+1) d^(k+1), so
        D^n = sum_k S(n,k) x^k d^k with Stirling numbers of the second kind.
        """
        # power[k] = coefficient of x^k d^k in the current D^n
        power: dict[int, Fraction] = {0: Fraction(1)}
        total: dict[int, Fraction] = {}
        for n, a in enumerate(self.coeffs):
            if n > 0:
                nxt: dict[int, Fraction] = {}
                for k, c in power.items():
                    nxt[k] = nxt.get(k, Fraction(0)) + k * c
                    nxt[k + 1] = nxt.get(k + 1, Fraction(0)) + c
                power = {k: c for k, c in nxt.items() if c != 0}
            if a != 0:
                for k, c in power.items():
                    total[k] = total.get(k, Fraction(0)) + a * c
        return DiffOp.from_terms((c, k, k) for k, c in total.items() if c != 0)

    def to_json_list(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]


def diag_eval(F: DiagonalOp, mu: Scalar) -> Scalar:
    """Evaluate F at an exponent (Horner)."""
    mu = Fraction(mu)
    acc = Fraction(0)
    for a in reversed(F.coeffs):
        acc = acc * mu + a
    return acc


def diag_invert_apply(F: DiagonalOp, s: OffsetSeries) -> OffsetSeries:
    """Divide each stored coefficient by F(offset + k).

    Raises ResonanceError when F vanishes on a stored (hence nonzero)
    coefficient's exponent; the ansatz breaks down there.
    """
    out: dict[int, Fraction] = {}
    for k, coeff in s.coeffs.items():
        mu = s.offset + k
        val = diag_eval(F, mu)
        if val == 0:
            raise ResonanceError(mu, "1/F(D) undefined on this exponent")
        out[k] = coeff / val
    return OffsetSeries(s.offset, out)


@dataclass(frozen=True)
class IrrationalRootPair:
    """Marker for indicial roots that are not rational.

    Carries the quadratic a2 x^2 + a1 x + a0 whose roots they are; such
    branches are reported, never iterated exactly.
    """

    a2: Scalar
    a1: Scalar
    a0: Scalar
    discriminant: Scalar

    def to_json_dict(self) -> dict:
        return {
            "irrational": True,
            "quadratic": [format_rational(c) for c in (self.a0, self.a1, self.a2)],
            "discriminant": format_rational(self.discriminant),
        }


def diagonal_roots(F: DiagonalOp) -> tuple[Scalar, ...] | IrrationalRootPair:
    """Exact roots of F for degree 1 or 2; marker when irrational or complex."""
    from .rational import rational_sqrt

    if F.degree > 2 or F.degree < 1:
        raise DegreeUnsupportedError(
            f"indicial roots require degree 1 or 2, got degree {F.degree}"
        )
    if F.degree == 1:
        a0, a1 = F.coeffs
        return (-a0 / a1,)
    a0, a1, a2 = F.coeffs
    disc = a1 * a1 - 4 * a2 * a0
    root = rational_sqrt(disc)
    if root is None:
        return IrrationalRootPair(a2, a1, a0, disc)
    r1 = (-a1 - root) / (2 * a2)
    r2 = (-a1 + root) / (2 * a2)
    return tuple(sorted((r1, r2)))
