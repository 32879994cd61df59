"""Formal monomial series x^offset * sum_k c_k x^k with exact coefficients.

The offset may be any rational; the stored indices k are integers and may
be negative.  Zero coefficients are never stored, so two series are equal
exactly when they describe the same set of monomials.  Values are immutable
after construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import IncompatibleOffsetsError
from .rational import Scalar, format_rational, parse_rational


@dataclass(frozen=True)
class OffsetSeries:
    offset: Scalar
    coeffs: dict[int, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "offset", Fraction(self.offset))
        cleaned = {}
        for k, v in self.coeffs.items():
            v = Fraction(v)
            if v != 0:
                cleaned[int(k)] = v
        object.__setattr__(self, "coeffs", cleaned)

    # -- constructors ------------------------------------------------------

    @classmethod
    def monomial(cls, exponent: Scalar, coeff: Scalar = Fraction(1)) -> "OffsetSeries":
        return cls(Fraction(exponent), {0: Fraction(coeff)})

    @classmethod
    def zero(cls, offset: Scalar = Fraction(0)) -> "OffsetSeries":
        return cls(Fraction(offset), {})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def indices(self) -> list[int]:
        return sorted(self.coeffs)

    def exponents(self) -> list[Scalar]:
        return [self.offset + k for k in self.indices()]

    def coefficient_at(self, exponent: Scalar) -> Scalar:
        """Coefficient of x^exponent (0 when absent or off the index lattice)."""
        rel = Fraction(exponent) - self.offset
        if rel.denominator != 1:
            return Fraction(0)
        return self.coeffs.get(int(rel), Fraction(0))

    def exponent_map(self) -> dict[Scalar, Scalar]:
        return {self.offset + k: v for k, v in self.coeffs.items()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, OffsetSeries):
            return NotImplemented
        return self.exponent_map() == other.exponent_map()

    def __hash__(self):
        return hash(frozenset(self.exponent_map().items()))

    # -- algebra -----------------------------------------------------------

    def scale(self, factor: Scalar) -> "OffsetSeries":
        factor = Fraction(factor)
        return OffsetSeries(self.offset, {k: factor * v for k, v in self.coeffs.items()})

    def shift_exponents(self, mu: Scalar) -> "OffsetSeries":
        """Multiply by x^mu (offset moves, indices stay)."""
        return OffsetSeries(self.offset + Fraction(mu), dict(self.coeffs))

    def rebased(self, new_offset: Scalar) -> "OffsetSeries":
        """Same series re-indexed to an offset differing by an integer."""
        new_offset = Fraction(new_offset)
        delta = self.offset - new_offset
        if delta.denominator != 1:
            raise IncompatibleOffsetsError(
                f"cannot rebase offset {self.offset} to {new_offset}: gap {delta} is not an integer"
            )
        d = int(delta)
        return OffsetSeries(new_offset, {k + d: v for k, v in self.coeffs.items()})

    def normalized(self) -> "OffsetSeries":
        """Re-index so the smallest stored index is 0 (no-op on the zero series)."""
        if not self.coeffs:
            return self
        lo = min(self.coeffs)
        return OffsetSeries(self.offset + lo, {k - lo: v for k, v in self.coeffs.items()})

    def restrict(self, lo: int | None = None, hi: int | None = None) -> "OffsetSeries":
        """Keep only stored indices k with lo <= k <= hi."""
        kept = {
            k: v
            for k, v in self.coeffs.items()
            if (lo is None or k >= lo) and (hi is None or k <= hi)
        }
        return OffsetSeries(self.offset, kept)

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "offset": format_rational(self.offset),
            "coeffs": {str(k): format_rational(self.coeffs[k]) for k in self.indices()},
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "OffsetSeries":
        offset = parse_rational(data["offset"])
        coeffs = {int(k): parse_rational(v) for k, v in data["coeffs"].items()}
        return cls(offset, coeffs)


def series_combine(a: OffsetSeries, b: OffsetSeries, scale: Scalar = Fraction(1)) -> OffsetSeries:
    """a + scale*b, re-indexed to the smaller offset.

    Raises IncompatibleOffsetsError when the offsets differ by a non-integer.
    """
    if b.is_zero():
        return a
    if a.is_zero():
        return b.scale(scale)
    gap = a.offset - b.offset
    if gap.denominator != 1:
        raise IncompatibleOffsetsError(
            f"offsets {a.offset} and {b.offset} differ by non-integer {gap}"
        )
    base = min(a.offset, b.offset)
    out: dict[int, Fraction] = dict(a.rebased(base).coeffs)
    scale = Fraction(scale)
    for k, v in b.rebased(base).coeffs.items():
        out[k] = out.get(k, Fraction(0)) + scale * v
    return OffsetSeries(base, out)


def series_sum(parts: Iterable[OffsetSeries]) -> OffsetSeries:
    total = OffsetSeries.zero()
    for p in parts:
        total = series_combine(total, p)
    return total
