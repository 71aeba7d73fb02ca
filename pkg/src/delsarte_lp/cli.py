"""Command-line interface.

    delsarte-lp bound 16 8 --mode balanced --method both
    delsarte-lp table --n-range 12..16:2 --d-range 6..8:2 --mode balanced --format csv
    delsarte-lp verify 36 16
    delsarte-lp verify --certificate-file cert.json
    delsarte-lp rates --delta-start 0.1 --delta-end 0.4 --steps 4 --format csv
    delsarte-lp witness 16 4

Exit codes: 0 success, 1 verification failure, 2 usage/domain/parse error.
Exact values are printed as "numerator/denominator" strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

import numpy as np

from .asymptotics import rate_table, rates_to_csv
from .certificates import (
    DomainError,
    build_certificate,
    certificate_from_record,
    certificate_to_record,
    verify_all,
)
from .delsarte import (
    ALMOST_BALANCED,
    NOT_APPLICABLE,
    bound_report,
    in_grey_rankin_domain,
    normalize_mode,
)
from .numeric import render_rational
from .samorodnitsky import WitnessInfeasibleError, build_witness


class UsageError(Exception):
    """Bad flags or out-of-domain parameters (exit code 2)."""


def _r(v):
    return None if v is None else render_rational(v)


def envelope(command: str, parameters: dict, result) -> dict:
    return {"command": command, "parameters": parameters, "result": result}


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _mode_arg(p: argparse.ArgumentParser, default="balanced"):
    p.add_argument("--mode", choices=("min", "balanced"), default=default)


def parse_range(text: str) -> list[int]:
    """'a..b' or 'a..b:step' (inclusive), or a single integer."""
    try:
        span, _, step = text.partition(":")
        lo, sep, hi = span.partition("..")
        lo = int(lo)
        hi = int(hi) if sep else lo
        step = int(step) if step else 1
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected a..b or a..b:step") from None
    if step < 1:
        raise UsageError(f"range step must be positive in {text!r}")
    values = list(range(lo, hi + 1, step))
    if not values:
        raise UsageError(f"empty range {text!r}")
    return values


def _report_row(n: int, d: int, mode: str) -> dict:
    rep = bound_report(n, d, mode)
    return {
        "n": n,
        "d": d,
        "mode": rep.mode,
        "lp_value": _r(rep.lp_value),
        "closed_form": _r(rep.closed_form),
        "certificate_status": rep.certificate_status,
        "lower_bound_witness": _r(rep.lower_bound_witness),
    }


def _report_row_star(args):
    return _report_row(*args)


def _check_nd(n: int, d: int) -> None:
    if n < 1 or not 1 <= d <= n:
        raise UsageError(f"need 1 <= d <= n, got n={n}, d={d}")


def cmd_bound(args) -> tuple[str, int]:
    _check_nd(args.n, args.d)
    mode = normalize_mode(args.mode)
    params = {"n": args.n, "d": args.d, "mode": mode, "method": args.method}
    if args.method == "closed-form" and not (mode == ALMOST_BALANCED and in_grey_rankin_domain(args.n, args.d)):
        raise UsageError(
            f"closed form needs balanced mode with even n, d and (n - sqrt n)/2 + 1 <= d <= n/2; "
            f"got n={args.n}, d={args.d}, mode={args.mode}"
        )
    rep = bound_report(args.n, args.d, mode, solve_lp=args.method != "closed-form")
    result = {"certificate_status": rep.certificate_status}
    if args.method in ("lp", "both"):
        result["lp_value"] = _r(rep.lp_value)
    if args.method in ("closed-form", "both"):
        result["closed_form"] = _r(rep.closed_form)
    if mode == ALMOST_BALANCED:
        result["lower_bound_witness"] = _r(rep.lower_bound_witness)
    result["notes"] = list(rep.notes)
    return _dump(envelope("bound", params, result)), 0


TABLE_FIELDS = ("n", "d", "mode", "lp_value", "closed_form", "certificate_status", "lower_bound_witness")


def cmd_table(args) -> tuple[str, int]:
    mode = normalize_mode(args.mode)
    pairs = sorted((n, d) for n in parse_range(args.n_range) for d in parse_range(args.d_range) if 1 <= d <= n)
    if not pairs:
        raise UsageError("no valid (n, d) pairs in the requested ranges")
    jobs = [(n, d, mode) for n, d in pairs]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_report_row_star, jobs))
    else:
        rows = [_report_row(*j) for j in jobs]
    rows.sort(key=lambda r: (r["n"], r["d"]))
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, TABLE_FIELDS, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: ("" if v is None else v) for k, v in r.items()})
        return buf.getvalue(), 0
    params = {"n_range": args.n_range, "d_range": args.d_range, "mode": mode}
    return _dump(envelope("table", params, {"rows": rows})), 0


def _load_certificate(path: str):
    try:
        with open(path) as fh:
            data = json.load(fh)
        if isinstance(data, dict) and "result" in data:
            data = data["result"]["certificate"]
        return certificate_from_record(data)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read certificate {path}: {exc}") from None


def cmd_verify(args) -> tuple[str, int]:
    if args.certificate_file:
        if args.n is not None or args.d is not None:
            raise UsageError("give either --certificate-file or n d, not both")
        cert = _load_certificate(args.certificate_file)
        params = {"certificate_file": args.certificate_file}
    else:
        if args.n is None or args.d is None:
            raise UsageError("verify needs n d or --certificate-file")
        try:
            cert = build_certificate(args.n, args.d)
        except DomainError as exc:
            raise UsageError(str(exc)) from None
        params = {"n": args.n, "d": args.d}
    summary = verify_all(cert)
    checks = []
    for rep in summary.reports:
        tight = rep.tightest
        entry = {"check": rep.name, "passed": rep.passed, "tightest_slack": _r(tight.slack), "tightest": tight.label}
        entry["failures"] = [f.label for f in rep.failures]
        checks.append(entry)
    result = {"passed": summary.passed, "checks": checks, "certificate": certificate_to_record(cert)}
    return _dump(envelope("verify", params, result)), 0 if summary.passed else 1


def cmd_rates(args) -> tuple[str, int]:
    start, end, steps = args.delta_start, args.delta_end, args.steps
    if not 0 < start < end < 0.5:
        raise UsageError(f"need 0 < delta-start < delta-end < 1/2, got {start}, {end}")
    if steps < 1:
        raise UsageError(f"steps must be at least 1, got {steps}")
    points = rate_table(np.linspace(start, end, steps))
    if args.format == "csv":
        return rates_to_csv(points), 0
    rows = [{k: float(f"{v:.6f}") for k, v in vars(p).items()} for p in points]
    params = {"delta_start": start, "delta_end": end, "steps": steps}
    return _dump(envelope("rates", params, {"rows": rows})), 0


def cmd_witness(args) -> tuple[str, int]:
    if args.n < 1 or not 1 <= args.d or 2 * args.d >= args.n:
        raise UsageError(f"witness needs 1 <= d < n/2, got n={args.n}, d={args.d}")
    try:
        w = build_witness(args.n, args.d, clip=args.clip)
    except WitnessInfeasibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return "", 1
    if args.format == "csv":
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(("k", "a_k"))
        for k, a in enumerate(w.a.a):
            wr.writerow((k, render_rational(a)))
        return buf.getvalue(), 0
    result = {
        "n": w.n,
        "d": w.d,
        "x_floor": w.x_floor,
        "x_d_bracket": [_r(w.x_d_bracket.low), _r(w.x_d_bracket.high)],
        "epsilon_lower": _r(w.epsilon_lower),
        "a": [_r(a) for a in w.a.a],
        "objective": _r(w.objective),
        "feasible": w.feasible,
        "min_row_slack": _r(w.feasibility.min_row_slack),
    }
    params = {"n": args.n, "d": args.d, "clip": args.clip}
    return _dump(envelope("witness", params, result)), 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="delsarte-lp", description="Exact Delsarte LP bounds for binary codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="LP and closed-form bound for one (n, d)")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    _mode_arg(p)
    p.add_argument("--method", choices=("lp", "closed-form", "both"), default="both")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("table", help="bounds over a grid of (n, d)")
    p.add_argument("--n-range", required=True)
    p.add_argument("--d-range", required=True)
    _mode_arg(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="check an optimality certificate")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("d", type=int, nargs="?")
    p.add_argument("--certificate-file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rates", help="asymptotic rate curves")
    p.add_argument("--delta-start", type=float, required=True)
    p.add_argument("--delta-end", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_rates)

    p = sub.add_parser("witness", help="feasible primal point giving a lower bound")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--clip", action="store_true", help="cap the scale at the largest feasible value")
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, code = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}".splitlines()[0], file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
