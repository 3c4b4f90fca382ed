"""hhcert command line: bounds, quadrature certificates, means and the audit engine.

Every command prints one JSON envelope on stdout:
{tool_version, command, inputs_echo, results, warnings}.

Exit codes: 0 holds, 3 violated, 2 hypothesis unmet under --certify,
64 bad flags, 1 evaluation failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Any, List, Optional, Sequence

import numpy as np

from . import __version__
from .audit import CLAIMS, CORRECTED, audit_all, audit_summary, grid_spec
from .errors import ConfigurationError, DomainError, IntegrationError
from .fnmodel import Interval, parse_function_spec
from .hhbounds import BOUND_IDS, LAMBDA_THEOREMS, evaluate_bound
from .means import PositivePair, all_means, means_chain_check
from .quadrature import convergence_study, midpoint_error_bound, trapezoid_error_bound, uniform_partition

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_HYPOTHESIS = 2
EXIT_VIOLATED = 3
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _fn_arg(text: str) -> str:
    try:
        parse_function_spec(text)
    except (ConfigurationError, DomainError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return text


def _pieces_list(text: str) -> List[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError("pieces must be positive integers")
    return values


def _clean(obj: Any) -> Any:
    """Make a payload JSON-safe: numpy scalars to Python, non-finite floats to null."""
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, (np.floating, float)):
        v = float(obj)
        return v if math.isfinite(v) else None
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


def envelope(command: str, inputs: dict, results: Any, warnings: Sequence[str] = ()) -> dict:
    return {
        "tool_version": __version__,
        "command": command,
        "inputs_echo": _clean(inputs),
        "results": _clean(results),
        "warnings": list(warnings),
    }


def dumps(env: dict) -> str:
    # float repr is the shortest round-trip form
    return json.dumps(env, indent=2, allow_nan=False)


def _echo(args: argparse.Namespace, skip=("func", "command")) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _hypothesis_warning(ok: bool, report) -> List[str]:
    if ok or report is None:
        return []
    msg = f"hypothesis not verified: {report.kind} check failed (worst violation {report.worst_violation!r})"
    if report.domain_violation:
        msg += "; function takes negative values or is not finite on the lattice"
    return [msg]


def _exit_code(holds: bool, hypothesis_ok: bool, certify: bool) -> int:
    if certify and not hypothesis_ok:
        return EXIT_HYPOTHESIS
    return EXIT_OK if holds else EXIT_VIOLATED


def cmd_bound(args) -> tuple:
    f = parse_function_spec(args.fn)
    interval = Interval(args.a, args.b)
    if args.theorem in LAMBDA_THEOREMS:
        if args.lam is None:
            args.lam = interval.midpoint
    elif args.lam is not None:
        raise UsageError(f"--lambda does not apply to {args.theorem}")
    res = evaluate_bound(args.theorem, f, interval, args.lam, args.n, args.s, args.q, args.variant)
    warnings = _hypothesis_warning(res.hypothesis_ok, res.hypothesis)
    if not res.holds:
        warnings.append(f"{args.theorem} ({res.variant}) violated: lhs {res.lhs!r} > bound {res.bound!r}")
    return envelope("bound", _echo(args), res.to_dict(), warnings), _exit_code(res.holds, res.hypothesis_ok, args.certify)


def cmd_quad(args) -> tuple:
    f = parse_function_spec(args.fn)
    interval = Interval(args.a, args.b)
    fn = midpoint_error_bound if args.rule == "midpoint" else trapezoid_error_bound
    res = fn(f, uniform_partition(interval, args.pieces), args.s, args.q, args.variant)
    results = {"certificate": res.to_dict()}
    warnings = _hypothesis_warning(res.hypothesis_ok, res.hypothesis)
    if not res.holds:
        warnings.append(f"{args.rule} certificate violated: error {res.oracle_error!r} > bound {res.error_bound!r}")
    if args.study:
        study = convergence_study(f, interval, args.rule, args.s, args.q, args.study, args.variant)
        results["study"] = study.to_dict()
        if args.csv:
            Path(args.csv).write_text(study.to_csv())
    elif args.csv:
        raise UsageError("--csv needs --study")
    return envelope("quad", _echo(args), results, warnings), _exit_code(res.holds, res.hypothesis_ok, args.certify)


def cmd_means(args) -> tuple:
    try:
        pair = PositivePair(args.a, args.b)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    results = {"means": [m.to_dict() for m in all_means(pair, args.p)]}
    code = EXIT_OK
    if args.chain:
        chk = means_chain_check(pair)
        results["chain"] = {"order": "H<=G<=L<=I<=A", "values": chk.as_dict(), "verdict": chk.verdict, "worst_gap": chk.worst_gap}
        code = EXIT_OK if chk.verdict == "pass" else EXIT_VIOLATED
    return envelope("means", _echo(args), results), code


def cmd_audit(args) -> tuple:
    claims = CLAIMS if args.claim == "all" else (args.claim,)
    spec = grid_spec(args.grid, args.seed)
    records = audit_all(spec, claims, jobs=args.jobs)
    summary = audit_summary(records)
    warnings = []
    corrected_violations = 0
    for key, entry in summary.items():
        if entry["violations"] == 0:
            continue
        if entry["variant"] == CORRECTED:
            corrected_violations += entry["violations"]
            warnings.append(f"{key}: {entry['violations']} violation(s) of a corrected variant")
        else:
            warnings.append(f"{key}: {entry['violations']} printed-variant violation(s)")
    results = {"summary": summary, "records": [r.to_dict() for r in records]}
    env = envelope("audit", _echo(args, skip=("func", "command", "json_path", "jobs")), results, warnings)
    if args.json_path:
        Path(args.json_path).write_text(dumps(env) + "\n")
    return env, EXIT_VIOLATED if corrected_violations else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hhcert", description="Certified Hermite-Hadamard type bounds and inequality audits.")
    parser.add_argument("--version", action="version", version=f"hhcert {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fn_flags(p):
        p.add_argument("--fn", required=True, type=_fn_arg, help="catalog function NAME[:v1,v2,...]")
        p.add_argument("--a", required=True, type=float)
        p.add_argument("--b", required=True, type=float)
        p.add_argument("--s", type=float, default=1.0)
        p.add_argument("--q", type=float, default=1.0)
        p.add_argument("--variant", choices=("corrected", "printed"), default="corrected")
        p.add_argument("--certify", action="store_true", help="exit 2 unless the hypothesis check passes")

    p = sub.add_parser("bound", help="evaluate one theorem bound against the oracle")
    p.add_argument("--theorem", required=True, choices=BOUND_IDS)
    fn_flags(p)
    p.add_argument("--lambda", dest="lam", type=float, default=None)
    p.add_argument("--n", type=int, default=1)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("quad", help="composite rule with its a-priori certificate")
    p.add_argument("--rule", required=True, choices=("midpoint", "trapezoid"))
    fn_flags(p)
    p.add_argument("--pieces", type=int, default=1)
    p.add_argument("--study", type=_pieces_list, default=None, help="comma-separated pieces for a convergence table")
    p.add_argument("--csv", default=None, help="write the convergence table here")
    p.set_defaults(func=cmd_quad)

    p = sub.add_parser("means", help="special means of two positive numbers")
    p.add_argument("--a", required=True, type=float)
    p.add_argument("--b", required=True, type=float)
    p.add_argument("--p", type=float, default=1.0, help="order r of the p-logarithmic mean")
    p.add_argument("--chain", action="store_true")
    p.set_defaults(func=cmd_means)

    p = sub.add_parser("audit", help="run the inequality audit")
    p.add_argument("--claim", default="all", choices=CLAIMS + ("all",))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--grid", choices=("small", "full"), default="full")
    p.add_argument("--json", dest="json_path", default=None, help="also write the envelope to this file")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (output is identical for any value)")
    p.set_defaults(func=cmd_audit)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        env, code = args.func(args)
    except (UsageError, ConfigurationError) as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"hhcert: error: {exc}\n")
        return EXIT_USAGE
    except (DomainError, IntegrationError, ArithmeticError) as exc:
        sys.stderr.write(f"hhcert: evaluation failed: {exc}\n")
        return EXIT_FAILURE
    sys.stdout.write(dumps(env) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
