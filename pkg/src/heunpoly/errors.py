"""Exception hierarchy shared across the package."""

from __future__ import annotations

from fractions import Fraction


class HeunpolyError(Exception):
    """Base class for all domain errors raised by heunpoly."""


class RationalFormatError(HeunpolyError, ValueError):
    """A rational literal does not match ``[+-]?int[/posint]``."""


class IncompatibleOffsetsError(HeunpolyError):
    """Two series whose offsets differ by a non-integer cannot be combined."""


class ResonanceError(HeunpolyError):
    """F vanished at an exponent carrying a nonzero coefficient.

    The iteration 1/F(D) is undefined there; classically this is the
    logarithmic case, which this library reports instead of solving.
    """

    def __init__(self, exponent: Fraction, message: str = ""):
        self.exponent = Fraction(exponent)
        detail = message or "F vanishes at an exponent with nonzero coefficient"
        super().__init__(f"resonance at exponent {exponent}: {detail}")


class InvalidParamsError(HeunpolyError):
    """Parameter values violate a structural requirement (e.g. c in {0, 1})."""


class UnknownCaseError(HeunpolyError):
    """Unrecognized decomposition case tag."""


class DegreeUnsupportedError(HeunpolyError):
    """Indicial root extraction only handles diagonal parts of degree 1 or 2."""


class IrrationalRootError(HeunpolyError):
    """An indicial root is not rational; the exact pipeline cannot iterate it."""


class PreconditionViolatedError(HeunpolyError):
    """An operation was invoked outside its stated domain."""


class DegenerateParametersError(HeunpolyError):
    """A reference recurrence hit a vanishing denominator."""


class SingularIntervalError(HeunpolyError):
    """A numeric-check interval contains a singular point of the equation."""


class ConstraintNotSatisfiedError(HeunpolyError):
    """Strict mode: a constraint attached to the requested case is violated."""
