"""Independent ground truth: direct recurrences, q-spectrum, Jacobi, RK4.

Nothing in this module touches the operator machinery.  The Frobenius
recurrence is hand-derived from the polynomial form of the equation by
equating powers of x; the accessory-parameter spectrum runs the same
recurrence with q left symbolic; the Jacobi reference uses the classical
monic three-term recurrence; and the numeric check integrates the original
ODE in floating point.  Agreement between these and the solver is the
evidence the test suite is built on.
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import kernels
from .errors import (
    DegenerateParametersError,
    PreconditionViolatedError,
    ResonanceError,
    SingularIntervalError,
)
from .heun import HeunParams
from .rational import Scalar, format_rational
from .series import OffsetSeries

# ---------------------------------------------------------------------------
# Frobenius recurrence straight from the polynomial-form equation
# ---------------------------------------------------------------------------
#
# Substituting sum c_k x^(lam+k) into the polynomial form and equating the
# coefficient of x^(lam+k) to zero forces
#
#   A(lam+k) c_k + B(lam+k-1) c_(k-1) + C(lam+k-2) c_(k-2) = 0
#
# with the scalar weights below.


def _weights(p: HeunParams):
    def A(mu: Fraction) -> Fraction:
        return p.c * mu * (mu + p.gamma - 1) - p.sigma

    def B(mu: Fraction) -> Fraction:
        return (
            -(1 + p.c) * mu * (mu - 1)
            - ((1 + p.c) * p.gamma + p.delta * p.c + p.epsilon) * mu
            - p.q
        )

    def C(mu: Fraction) -> Fraction:
        return mu * (mu - 1) + (p.gamma + p.delta + p.epsilon) * mu + p.alpha * p.beta

    return A, B, C


def frobenius_coefficients(params: HeunParams, lam: Scalar, order: int) -> OffsetSeries:
    """Coefficients c_0..c_order (c_0 = 1) of the series at x^lam.

    Independent of the operator pipeline; requires A(lam) = 0 and raises
    ResonanceError when A vanishes with a nonzero source inside the run.
    """
    lam = Fraction(lam)
    A, B, C = _weights(params)
    if A(lam) != 0:
        raise PreconditionViolatedError(f"x^{lam} is not an admissible starting exponent")
    coeffs = {0: Fraction(1)}
    for k in range(1, order + 1):
        src = B(lam + k - 1) * coeffs.get(k - 1, Fraction(0))
        src += C(lam + k - 2) * coeffs.get(k - 2, Fraction(0))
        denom = A(lam + k)
        if denom == 0:
            if src != 0:
                raise ResonanceError(lam + k, "recurrence denominator vanished")
            coeffs[k] = Fraction(0)
        else:
            coeffs[k] = -src / denom
    return OffsetSeries(lam, coeffs)


# ---------------------------------------------------------------------------
# Accessory parameter spectrum
# ---------------------------------------------------------------------------


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] += v
    return _poly_trim(out)


def _poly_scale(a: Sequence[Fraction], s: Fraction) -> list[Fraction]:
    return _poly_trim([s * v for v in a])


def _poly_mul_q(a: Sequence[Fraction]) -> list[Fraction]:
    """Multiply a polynomial in q by q."""
    return [Fraction(0)] + list(a) if a else []


def _poly_eval(a: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for v in reversed(list(a)):
        acc = acc * x + v
    return acc


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.add(i)
            out.add(n // i)
        i += 1
    return sorted(out)


def rational_poly_roots(coeffs: Sequence[Fraction]) -> list[Fraction]:
    """All rational roots of a polynomial with rational coefficients, exact."""
    poly = _poly_trim([Fraction(c) for c in coeffs])
    if not poly:
        raise PreconditionViolatedError("zero polynomial has every rational as a root")
    roots: set[Fraction] = set()
    low = 0
    while low < len(poly) and poly[low] == 0:
        low += 1
    if low > 0:
        roots.add(Fraction(0))
        poly = poly[low:]
    if len(poly) <= 1:
        return sorted(roots)
    scale = math.lcm(*(c.denominator for c in poly))
    ints = [int(c * scale) for c in poly]
    content = math.gcd(*ints)
    ints = [v // content for v in ints]
    for p in _divisors(ints[0]):
        for qd in _divisors(ints[-1]):
            if math.gcd(p, qd) != 1:
                continue
            for cand in (Fraction(p, qd), Fraction(-p, qd)):
                if _poly_eval(poly, cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def _sign_changes(poly: Sequence[Fraction]) -> list[tuple[int, int]]:
    """Integer intervals (i, i+1) where the polynomial changes sign.

    Existence hints for irrational roots only; never produces values.
    """
    bound = 1 + math.ceil(max(abs(c / poly[-1]) for c in poly[:-1]) if len(poly) > 1 else 0)
    out = []
    prev = _poly_eval(poly, Fraction(-bound))
    for i in range(-bound + 1, bound + 1):
        cur = _poly_eval(poly, Fraction(i))
        if prev != 0 and cur != 0 and (prev > 0) != (cur > 0):
            out.append((i - 1, i))
        prev = cur
    return out


@dataclass(frozen=True)
class QSpectrum:
    """Degree-(n+1) polynomial condition in q for a degree-n polynomial solution."""

    degree: int
    char_poly: tuple[Scalar, ...]
    rational_roots: tuple[Scalar, ...]
    sign_change_intervals: tuple[tuple[int, int], ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "charPoly": [format_rational(c) for c in self.char_poly],
            "rationalRoots": [format_rational(r) for r in self.rational_roots],
            "signChangeIntervals": [list(iv) for iv in self.sign_change_intervals],
        }


def q_spectrum(n: int, params: HeunParams, find_roots: bool = True) -> QSpectrum:
    """Accessory parameters admitting a degree-n polynomial solution.

    Runs the ascending recurrence at lambda = 0 with q symbolic; the
    coefficient equation at x^(n+1) then reads F(n+1) c_(n+1) = -charPoly(q),
    and (with alpha = -n and the exponent-sum relation in force) charPoly's
    roots are exactly the admissible q values.
    """
    if n < 0 or n != int(n):
        raise PreconditionViolatedError(f"degree must be a nonnegative integer, got {n}")
    p = params
    if p.sigma != 0:
        raise PreconditionViolatedError("spectrum is defined for sigma = 0")
    if p.alpha != -n:
        raise PreconditionViolatedError(f"alpha must equal -n = {-n}, got {p.alpha}")
    if p.gamma + p.delta + p.epsilon != p.alpha + p.beta + 1:
        raise PreconditionViolatedError("gamma+delta+epsilon = alpha+beta+1 must hold")
    for k in range(1, n + 1):
        if p.c * k * (k + p.gamma - 1) == 0:
            raise PreconditionViolatedError(
                f"gamma = {p.gamma} makes the ascending recurrence resonate at step {k}"
            )

    def A(mu: int) -> Fraction:
        return p.c * mu * (mu + p.gamma - 1)

    def B0(mu: int) -> Fraction:
        return -(1 + p.c) * mu * (mu - 1) - ((1 + p.c) * p.gamma + p.delta * p.c + p.epsilon) * mu

    def C(mu: int) -> Fraction:
        return Fraction(mu) * (mu - 1) + (p.gamma + p.delta + p.epsilon) * mu + p.alpha * p.beta

    prev: list[Fraction] = []          # c_(-1)
    cur: list[Fraction] = [Fraction(1)]  # c_0
    for k in range(1, n + 1):
        src = _poly_add(
            _poly_add(_poly_scale(cur, B0(k - 1)), _poly_scale(_poly_mul_q(cur), Fraction(-1))),
            _poly_scale(prev, C(k - 2)),
        )
        prev, cur = cur, _poly_scale(src, Fraction(-1) / A(k))
    char = _poly_add(
        _poly_add(_poly_scale(cur, B0(n)), _poly_scale(_poly_mul_q(cur), Fraction(-1))),
        _poly_scale(prev, C(n - 1)),
    )
    if len(char) != n + 2:
        raise PreconditionViolatedError(
            f"spectrum polynomial degenerated: expected degree {n + 1}, got {len(char) - 1}"
        )
    roots = tuple(rational_poly_roots(char)) if find_roots else ()
    hints = tuple(_sign_changes(char)) if find_roots else ()
    return QSpectrum(n, tuple(char), roots, hints)


# ---------------------------------------------------------------------------
# Jacobi reference polynomials
# ---------------------------------------------------------------------------


def jacobi_reference(n: int, alpha: Scalar, beta: Scalar) -> tuple[Scalar, ...]:
    """Monic Jacobi polynomial coefficients (ascending powers, length n+1).

    Classical three-term recurrence p_(k+1) = (x - a_k) p_k - b_k p_(k-1);
    the k = 1 coefficient uses its cancelled closed form so that
    alpha + beta = -1 is not a spurious degeneracy.
    """
    if n < 0:
        raise PreconditionViolatedError(f"degree must be nonnegative, got {n}")
    a, b = Fraction(alpha), Fraction(beta)
    try:
        p_prev = [Fraction(1)]
        if n == 0:
            return tuple(p_prev)
        p_cur = [(a - b) / (a + b + 2), Fraction(1)]
        for k in range(1, n):
            s = a + b
            ak = (b * b - a * a) / ((2 * k + s) * (2 * k + s + 2))
            if k == 1:
                bk = 4 * (1 + a) * (1 + b) / ((2 + s) ** 2 * (3 + s))
            else:
                bk = (
                    4 * k * (k + a) * (k + b) * (k + s)
                    / ((2 * k + s) ** 2 * (2 * k + s + 1) * (2 * k + s - 1))
                )
            nxt = [Fraction(0)] + p_cur
            for i, v in enumerate(p_cur):
                nxt[i] -= ak * v
            for i, v in enumerate(p_prev):
                nxt[i] -= bk * v
            p_prev, p_cur = p_cur, nxt
        return tuple(p_cur)
    except ZeroDivisionError as exc:
        raise DegenerateParametersError(
            f"three-term recurrence denominator vanished for alpha={a}, beta={b}"
        ) from exc


# ---------------------------------------------------------------------------
# Floating-point integration check
# ---------------------------------------------------------------------------


def numeric_check(
    params: HeunParams,
    candidate: OffsetSeries,
    interval: tuple[float, float],
    steps: int,
) -> float:
    """Max deviation between an RK4 integration and the candidate on a grid.

    Integrates the original equation from interval[0] with initial value and
    slope read off the candidate; the interval must avoid the singular
    points 0, 1, c.  Fixed-step classical RK4 keeps the number reproducible.
    """
    x0, x1 = float(interval[0]), float(interval[1])
    lo, hi = min(x0, x1), max(x0, x1)
    for s in (0.0, 1.0, float(params.c)):
        if lo <= s <= hi:
            raise SingularIntervalError(f"interval [{lo}, {hi}] contains singular point {s}")
    exponents = candidate.exponents()
    if any(e.denominator != 1 for e in exponents) and lo <= 0:
        raise PreconditionViolatedError(
            "non-integer exponents require a strictly positive interval"
        )
    if any(e < 0 for e in exponents) and lo <= 0 <= hi:
        raise SingularIntervalError("candidate has a pole at 0 inside the interval")
    if x0 == x1:
        return 0.0
    if steps < 1:
        raise PreconditionViolatedError(f"steps must be positive, got {steps}")

    emap = candidate.exponent_map()
    exps = array("d", (float(e) for e in sorted(emap)))
    cfs = array("d", (float(emap[e]) for e in sorted(emap)))
    y0 = 0.0
    yp0 = 0.0
    for e, cf in sorted(emap.items()):
        fe, fc = float(e), float(cf)
        y0 += fc * math.pow(x0, fe)
        if fe != 0.0:
            yp0 += fc * fe * math.pow(x0, fe - 1.0)
    return kernels.rk4_max_deviation(
        float(params.gamma),
        float(params.delta),
        float(params.epsilon),
        float(params.alpha * params.beta),
        float(params.q),
        float(params.c),
        float(params.sigma),
        x0,
        x1,
        int(steps),
        exps,
        cfs,
        y0,
        yp0,
    )
