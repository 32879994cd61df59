"""Command-line front end with byte-deterministic text/JSON output.

Subcommands: decompose, series, poly, find, spectrum, verify, jacobi,
constraints, eval.  Parameters are exact rational literals ("-3/7", "2").
Exit codes: 0 success, 1 usage error (unknown flags, malformed literals),
2 domain error (resonance, invalid parameters, strict-mode constraint
violations).  JSON goes to stdout; text-mode errors go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import (
    ConstraintNotSatisfiedError,
    HeunpolyError,
    PreconditionViolatedError,
    ResonanceError,
)
from .heun import (
    CASE_ASCENDING,
    CASE_EXTENDED,
    CASE_I,
    CASE_II,
    CASE_JACOBI,
    HeunParams,
    build_decomposition,
    case_polynomial_reports,
    check_constraints,
    derive_q_constraint,
    find_polynomial_solutions,
    indicial_roots,
    solve_descending,
    solve_series,
    verify_residual,
)
from .operators import IrrationalRootPair, grade_decompose
from .oracles import jacobi_reference, numeric_check, q_spectrum
from .rational import format_rational, parse_rational
from .series import OffsetSeries

_PARAM_NAMES = ("alpha", "beta", "gamma", "delta", "epsilon", "q", "c", "sigma")

_CASE_ALIASES = {
    "ascending": CASE_ASCENDING,
    "i": CASE_I,
    "case_i": CASE_I,
    "ii": CASE_II,
    "case_ii": CASE_II,
    "extended": CASE_EXTENDED,
    "jacobi": CASE_JACOBI,
}


@dataclass
class CliRequest:
    """A parsed invocation; run() consumes it and writes one report."""

    command: str
    fmt: str = "text"
    strict: bool = False
    params: Optional[dict[str, Fraction]] = None
    case: Optional[str] = None
    root: Optional[str] = None
    order: int = 50
    k_min: Optional[int] = None
    n: Optional[int] = None
    alpha: Optional[Fraction] = None
    beta: Optional[Fraction] = None
    series: Optional[dict] = None
    x0: Optional[float] = None
    x1: Optional[float] = None
    steps: int = 10000
    diagnostics: list[str] = field(default_factory=list)


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures on exit code 1 instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except HeunpolyError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _root_arg(text: str) -> str:
    if text in ("first", "second"):
        return text
    try:
        parse_rational(text)
    except HeunpolyError as exc:
        raise argparse.ArgumentTypeError(
            f"root must be 'first', 'second', or a rational literal: {exc}"
        ) from exc
    return text


def _series_arg(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"series must be JSON: {exc}") from exc
    if not isinstance(data, dict) or "offset" not in data or "coeffs" not in data:
        raise argparse.ArgumentTypeError('series JSON needs "offset" and "coeffs"')
    return data


def _add_param_flags(parser, required=True, with_alpha=True):
    for name in _PARAM_NAMES:
        if name == "sigma":
            parser.add_argument("--sigma", type=_rational_arg, default=Fraction(0),
                                help="extra -sigma/x coefficient (default 0)")
        elif name == "q":
            parser.add_argument("--q", type=_rational_arg, required=required,
                                help="accessory parameter")
        elif name == "alpha" and not with_alpha:
            parser.add_argument("--alpha", type=_rational_arg, default=None,
                                help="defaults to -n; must equal -n when given")
        else:
            parser.add_argument(f"--{name}", type=_rational_arg, required=required,
                                help=f"parameter {name}")


def _add_common_flags(parser):
    parser.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default text)")
    parser.add_argument("--strict", action="store_true",
                        help="treat unsatisfied case constraints as errors")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="heun", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decompose", help="show the (F, P) split of a case")
    _add_param_flags(p)
    p.add_argument("--case", type=str.lower, choices=sorted(set(_CASE_ALIASES) - {"jacobi"}),
                   default="ascending")
    _add_common_flags(p)

    p = sub.add_parser("series", help="truncated series solution")
    _add_param_flags(p)
    p.add_argument("--case", type=str.lower, choices=sorted(set(_CASE_ALIASES) - {"jacobi"}),
                   default="ascending")
    p.add_argument("--root", type=_root_arg, default=None,
                   help="indicial root: 'first', 'second', or a rational (default 0 "
                        "for ascending, 'first' otherwise)")
    p.add_argument("--order", type=int, default=50, help="truncation order (default 50)")
    _add_common_flags(p)

    p = sub.add_parser("poly", help="descending polynomial search for one case")
    _add_param_flags(p)
    p.add_argument("--case", type=str.lower, choices=("i", "ii", "extended", "case_i", "case_ii"),
                   required=True)
    p.add_argument("--root", type=_root_arg, default=None,
                   help="start exponent; default tries every nonnegative integer root")
    p.add_argument("--k-min", dest="k_min", type=int, default=None,
                   help="descent floor (default -(n+16))")
    _add_common_flags(p)

    p = sub.add_parser("find", help="polynomial search across case_i, case_ii, extended")
    _add_param_flags(p)
    _add_common_flags(p)

    p = sub.add_parser("spectrum", help="accessory-parameter spectrum for degree n")
    p.add_argument("--n", type=int, required=True, help="polynomial degree")
    _add_param_flags(p, required=True, with_alpha=False)
    _add_common_flags(p)

    p = sub.add_parser("verify", help="exact residual of a candidate series")
    _add_param_flags(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--series", type=_series_arg, help="candidate series as JSON")
    group.add_argument("--series-file", type=str, help="path to candidate series JSON")
    _add_common_flags(p)

    p = sub.add_parser("jacobi", help="monic Jacobi reference polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=_rational_arg, required=True)
    p.add_argument("--beta", type=_rational_arg, required=True)
    _add_common_flags(p)

    p = sub.add_parser("constraints", help="evaluate the constraints attached to a case")
    _add_param_flags(p)
    p.add_argument("--case", type=str.lower, choices=sorted(set(_CASE_ALIASES) - {"jacobi"}),
                   required=True)
    _add_common_flags(p)

    p = sub.add_parser("eval", help="RK4 cross-check of a candidate on an interval")
    _add_param_flags(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--series", type=_series_arg, help="candidate series as JSON")
    group.add_argument("--series-file", type=str, help="path to candidate series JSON")
    p.add_argument("--x0", type=float, required=True)
    p.add_argument("--x1", type=float, required=True)
    p.add_argument("--steps", type=int, default=10000)
    _add_common_flags(p)

    return parser


def request_from_args(args: argparse.Namespace) -> CliRequest:
    req = CliRequest(command=args.command, fmt=getattr(args, "format", "text"),
                     strict=getattr(args, "strict", False))
    if hasattr(args, "gamma"):
        req.params = {name: getattr(args, name) for name in _PARAM_NAMES}
    req.case = _CASE_ALIASES.get(getattr(args, "case", None) or "", None)
    req.root = getattr(args, "root", None)
    req.order = getattr(args, "order", 50)
    req.k_min = getattr(args, "k_min", None)
    req.n = getattr(args, "n", None)
    req.alpha = getattr(args, "alpha", None)
    req.beta = getattr(args, "beta", None)
    series = getattr(args, "series", None)
    series_file = getattr(args, "series_file", None)
    if series_file is not None:
        with open(series_file, "r", encoding="utf-8") as fh:
            series = _series_arg(fh.read())
    req.series = series
    req.x0 = getattr(args, "x0", None)
    req.x1 = getattr(args, "x1", None)
    req.steps = getattr(args, "steps", 10000)
    return req


# ---------------------------------------------------------------------------
# Handlers
# ---------------------------------------------------------------------------


def _heun_params(req: CliRequest) -> HeunParams:
    return HeunParams(**req.params)


def _enforce_strict(req: CliRequest, constraints) -> None:
    if not req.strict:
        return
    unmet = [c.name for c in constraints if not c.satisfied]
    if unmet:
        raise ConstraintNotSatisfiedError("unsatisfied constraints: " + "; ".join(unmet))


def _roots_json(roots):
    if isinstance(roots, IrrationalRootPair):
        return roots.to_json_dict()
    return [format_rational(r) for r in roots]


def _resolve_root(req: CliRequest, d) -> Fraction:
    choice = req.root
    if choice is None:
        choice = "0" if d.case_tag == CASE_ASCENDING else "first"
    if choice in ("first", "second"):
        roots = indicial_roots(d)
        if isinstance(roots, IrrationalRootPair):
            from .errors import IrrationalRootError

            raise IrrationalRootError(
                "indicial roots are irrational; the exact iteration cannot start there"
            )
        idx = 0 if choice == "first" else len(roots) - 1
        return roots[idx]
    return parse_rational(choice)


def _term_json(t) -> dict:
    return {"coeff": format_rational(t.coeff), "xpow": t.xpow, "dorder": t.dorder}


def _cmd_decompose(req: CliRequest):
    params = _heun_params(req)
    d = build_decomposition(params, req.case)
    grading = grade_decompose(d.P)
    result = {
        "caseTag": d.case_tag,
        "prefactorOffset": format_rational(d.prefactor_offset),
        "F": d.F.to_json_list(),
        "P": [_term_json(t) for t in d.P.terms],
        "grading": {str(deg): [_term_json(t) for t in op.terms] for deg, op in grading.items()},
        "indicialRoots": _roots_json(indicial_roots(d)),
    }
    return result, list(d.diagnostics)


def _cmd_series(req: CliRequest):
    params = _heun_params(req)
    d = build_decomposition(params, req.case)
    _enforce_strict(req, check_constraints(params, req.case))
    lam = _resolve_root(req, d)
    s = solve_series(d, lam, req.order)
    result = {
        "caseTag": d.case_tag,
        "lambda": format_rational(lam),
        "order": req.order,
        "series": s.to_json_dict(),
    }
    return result, list(d.diagnostics)


def _cmd_poly(req: CliRequest):
    params = _heun_params(req)
    constraints = check_constraints(params, req.case)
    _enforce_strict(req, constraints)
    if req.root is not None:
        d = build_decomposition(params, req.case)
        lam = _resolve_root(req, d)
        if lam.denominator != 1 or lam < 0:
            raise PreconditionViolatedError(
                f"descending runs need a nonnegative integer root, got {lam}"
            )
        reports = [solve_descending(d, int(lam), req.k_min)]
    else:
        reports = case_polynomial_reports(params, req.case)
    return {"reports": [r.to_json_dict() for r in reports]}, []


def _cmd_find(req: CliRequest):
    params = _heun_params(req)
    if req.strict:
        for case in (CASE_I, CASE_II, CASE_EXTENDED):
            _enforce_strict(req, check_constraints(params, case))
    reports = find_polynomial_solutions(params)
    return {"reports": [r.to_json_dict() for r in reports]}, []


def _cmd_spectrum(req: CliRequest):
    raw = dict(req.params)
    if raw.get("alpha") is None:
        raw["alpha"] = Fraction(-req.n)
    params = HeunParams(**raw)
    spec = q_spectrum(req.n, params)
    return spec.to_json_dict(), []


def _cmd_verify(req: CliRequest):
    params = _heun_params(req)
    candidate = OffsetSeries.from_json_dict(req.series)
    residual = verify_residual(params, candidate)
    return {"residual": residual.to_json_dict(), "isZero": residual.is_zero()}, []


def _cmd_jacobi(req: CliRequest):
    coeffs = jacobi_reference(req.n, req.alpha, req.beta)
    series = OffsetSeries(Fraction(0), {i: c for i, c in enumerate(coeffs)})
    result = {
        "degree": req.n,
        "coefficients": [format_rational(c) for c in coeffs],
        "series": series.to_json_dict(),
    }
    return result, []


def _cmd_constraints(req: CliRequest):
    params = _heun_params(req)
    checks = check_constraints(params, req.case)
    result = {
        "caseTag": req.case,
        "constraints": [c.to_json_dict() for c in checks],
    }
    if req.case in (CASE_II, CASE_EXTENDED):
        result["qDerivation"] = derive_q_constraint(params, req.case).to_json_dict()
    return result, []


def _cmd_eval(req: CliRequest):
    params = _heun_params(req)
    candidate = OffsetSeries.from_json_dict(req.series)
    deviation = numeric_check(params, candidate, (req.x0, req.x1), req.steps)
    result = {
        "x0": req.x0,
        "x1": req.x1,
        "steps": req.steps,
        "maxDeviation": deviation,
    }
    return result, []


_HANDLERS = {
    "decompose": _cmd_decompose,
    "series": _cmd_series,
    "poly": _cmd_poly,
    "find": _cmd_find,
    "spectrum": _cmd_spectrum,
    "verify": _cmd_verify,
    "jacobi": _cmd_jacobi,
    "constraints": _cmd_constraints,
    "eval": _cmd_eval,
}


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def _text_lines(obj, prefix, out):
    if isinstance(obj, dict):
        if not obj:
            out.append(f"{prefix} = {{}}")
            return
        for key, value in obj.items():
            _text_lines(value, f"{prefix}.{key}" if prefix else str(key), out)
    elif isinstance(obj, list):
        if not obj:
            out.append(f"{prefix} = []")
            return
        for i, value in enumerate(obj):
            _text_lines(value, f"{prefix}[{i}]", out)
    elif isinstance(obj, bool):
        out.append(f"{prefix} = {'true' if obj else 'false'}")
    elif obj is None:
        out.append(f"{prefix} = null")
    elif isinstance(obj, float):
        out.append(f"{prefix} = {obj!r}")
    else:
        out.append(f"{prefix} = {obj}")


def _render(envelope: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(envelope, indent=2) + "\n"
    lines: list[str] = []
    _text_lines(envelope, "", lines)
    return "\n".join(lines) + "\n"


def _params_json(req: CliRequest):
    if req.params is None:
        return None
    return {
        name: None if value is None else format_rational(value)
        for name, value in req.params.items()
    }


def run(request: CliRequest) -> int:
    """Execute a parsed request; emits the report and returns the exit code."""
    envelope = {
        "command": request.command,
        "params": _params_json(request),
        "result": None,
        "diagnostics": [],
        "errors": [],
    }
    try:
        result, diagnostics = _HANDLERS[request.command](request)
    except HeunpolyError as exc:
        error = {"type": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, ResonanceError):
            error["exponent"] = format_rational(exc.exponent)
        envelope["errors"] = [error]
        if request.fmt == "json":
            sys.stdout.write(_render(envelope, "json"))
        else:
            sys.stderr.write(f"error: {error['type']}: {error['message']}\n")
        return 2
    envelope["result"] = result
    envelope["diagnostics"] = diagnostics
    sys.stdout.write(_render(envelope, request.fmt))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return run(request_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
