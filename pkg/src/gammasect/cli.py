"""Command-line front-end: verification sweeps, closed-form volumes and
bounds, and Monte Carlo section experiments, emitting versioned JSON/CSV
reports.

Exit codes: 0 success / all certified / check passed, 1 counterexample or
failed check, 2 inconclusive-only verification failures, 64 usage error,
65 domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import time
from datetime import datetime, timezone

from .certify import Status, verify_all
from .geometry import (
    DomainError,
    InnerNorm,
    PBall,
    PSumBody,
    RangeError,
    diagonal_section_ratio,
    ellipsoid_lower_bound,
    hensley_lower_bound,
    isotropy_constant_sq,
    log_volume,
    log_volume_psum,
    low_p_constant,
    volume,
    volume_psum,
)
from .sections import min_section_scan

SCHEMA_VERSION = "1.0"

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64
EXIT_DOMAIN = 65


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage failures exit with code 64."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _timestamp() -> str:
    # SOURCE_DATE_EPOCH pins the report timestamp for reproducible runs
    env = os.environ.get("SOURCE_DATE_EPOCH")
    t = int(env) if env else int(time.time())
    return datetime.fromtimestamp(t, timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _report(command: str, parameters: dict, results: list, seed: int) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": parameters,
        "results": results,
        "timestamp": _timestamp(),
        "seed": seed,
    }


def serialize_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    params = report["parameters"]
    pkeys = sorted(params)
    if report["command"] == "verify":
        writer.writerow(["case_id", "status", "witness", "unresolved"] + pkeys)
        for cert in report["results"]:
            writer.writerow(
                [
                    cert["case_id"],
                    cert["status"],
                    "" if cert["witness"] is None else json.dumps(cert["witness"]),
                    len(cert["unresolved"]),
                ]
                + [params[k] for k in pkeys]
            )
    else:
        writer.writerow(["id", "value", "std_error"] + pkeys)
        for row in report["results"]:
            writer.writerow(
                [row["id"], row["value"], row.get("std_error", "")]
                + [params[k] for k in pkeys]
            )
    return buf.getvalue()


def _emit(report: dict, fmt: str, out: str | None) -> None:
    text = serialize_report(report, fmt)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _mutate_enabled() -> bool:
    return bool(os.environ.get("GAMMASECT_ENABLE_MUTATE"))


def cmd_verify(args: argparse.Namespace) -> int:
    case_ids = None
    if args.cases and args.cases != "all":
        case_ids = [c for c in args.cases.split(",") if c]
    mutate = getattr(args, "mutate", 0.0) or 0.0
    try:
        certs = verify_all(
            x_max=args.x_max,
            y_max=args.y_max,
            n_max=args.n_max,
            depth_limit=args.depth,
            grid_fallback=args.grid,
            cases=case_ids,
            mutate=mutate,
        )
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    parameters = {
        "cases": args.cases,
        "x_max": args.x_max,
        "y_max": args.y_max,
        "n_max": args.n_max,
        "depth": args.depth,
        "grid": args.grid,
        "mutate": mutate,
    }
    report = _report("verify", parameters, [c.to_dict() for c in certs], seed=0)
    _emit(report, args.format, args.out)
    statuses = {c.status for c in certs}
    if Status.COUNTEREXAMPLE in statuses:
        return EXIT_COUNTEREXAMPLE
    if Status.INCONCLUSIVE in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


# ---------------------------------------------------------------------------
# volume
# ---------------------------------------------------------------------------


def _parse_psum(spec: str, p: float) -> PSumBody:
    parts = []
    for token in spec.split(","):
        token = token.strip()
        if not token:
            continue
        dim_str, _, norm_str = token.partition(":")
        try:
            dim = int(dim_str)
        except ValueError as exc:
            raise DomainError(f"bad p-sum part {token!r}") from exc
        norm_str = (norm_str or "e").lower()
        if norm_str in ("e", "euclidean", "2"):
            norm = InnerNorm.EUCLIDEAN
        elif norm_str in ("l1", "ell1", "1"):
            norm = InnerNorm.ELL1
        else:
            raise DomainError(f"unknown inner norm {norm_str!r} in {token!r}")
        parts.append((dim, norm))
    return PSumBody(parts=tuple(parts), p=p)


def cmd_volume(args: argparse.Namespace) -> int:
    quantity = args.quantity
    k = None
    if quantity.startswith("ellipsoid:"):
        try:
            k = int(quantity.split(":", 1)[1])
        except ValueError:
            print(f"error: bad ellipsoid k in {quantity!r}", file=sys.stderr)
            return EXIT_USAGE
        quantity = "ellipsoid"
    if quantity not in ("volume", "isotropy", "hensley", "ellipsoid", "lowp", "diag"):
        print(f"error: unknown quantity {args.quantity!r}", file=sys.stderr)
        return EXIT_USAGE

    try:
        if args.psum:
            if quantity != "volume":
                raise DomainError("p-sum bodies only support --quantity volume")
            body = _parse_psum(args.psum, args.p)
            value = volume_psum(body)
        elif quantity == "volume":
            value = volume(PBall(n=args.n, p=args.p))
        elif quantity == "isotropy":
            value = isotropy_constant_sq(PBall(n=args.n, p=args.p))
        elif quantity == "hensley":
            value = hensley_lower_bound(PBall(n=args.n, p=args.p))
        elif quantity == "ellipsoid":
            value = ellipsoid_lower_bound(PBall(n=args.n, p=args.p), k)
        elif quantity == "lowp":
            value = low_p_constant(args.p)
        else:
            value = diagonal_section_ratio(PBall(n=args.n, p=args.p))
    except (DomainError, RangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN

    parameters = {
        "n": args.n,
        "p": args.p,
        "psum": args.psum,
        "quantity": args.quantity,
    }
    results = [{"id": args.quantity, "value": value}]
    report = _report("volume", parameters, results, seed=0)
    print(f"{args.quantity} = {value!r}")
    _emit(report, args.format, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# sections
# ---------------------------------------------------------------------------


def cmd_sections(args: argparse.Namespace) -> int:
    try:
        if args.psum:
            body = _parse_psum(args.psum, args.p)
            dim = body.dim
            log_vol = log_volume_psum(body)
        else:
            body = PBall(n=args.n, p=args.p)
            dim = body.n
            log_vol = log_volume(body)
        if not 1 <= args.k <= dim:
            print(
                f"error: k={args.k} out of range for dimension {dim}",
                file=sys.stderr,
            )
            return EXIT_DOMAIN
        est, sub = min_section_scan(
            body, k=args.k, trials=args.trials, samples=args.samples, seed=args.seed
        )
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN

    k = args.k
    # delta method: std error of value^(1/k)
    root = est.value ** (1.0 / k)
    root_err = est.std_error * root / (k * est.value) if est.value > 0 else math.inf

    check = args.check
    passed = True
    bound = None
    if check == "eq1":
        bound = math.exp(log_vol / dim)
    elif check == "prop25":
        if args.psum or not 0.0 < args.p <= 1.0:
            print("error: prop25 check needs a PBall with 0 < p <= 1", file=sys.stderr)
            return EXIT_DOMAIN
        bound = low_p_constant(args.p) * math.exp(log_vol / dim)
    if bound is not None:
        passed = root >= bound - 3.0 * root_err
        margin = (root - bound) / root_err if root_err > 0 else math.inf
        print(
            f"check {check}: min^(1/k)={root:.9g} bound={bound:.9g} "
            f"margin={margin:+.2f} sigma -> {'PASS' if passed else 'FAIL'}"
        )
    else:
        print(f"min section estimate = {est.value!r} +- {est.std_error!r}")

    parameters = {
        "n": args.n,
        "p": args.p,
        "psum": args.psum,
        "k": args.k,
        "trials": args.trials,
        "samples": args.samples,
        "check": check,
    }
    results = [
        {
            "id": "min_section",
            "value": est.value,
            "std_error": est.std_error,
            "samples": est.samples,
            "root_value": root,
            "root_std_error": root_err,
            "bound": bound,
            "passed": passed,
            "argmin_basis": [[float(v) for v in row] for row in sub.basis],
        }
    ]
    report = _report("sections", parameters, results, seed=args.seed)
    _emit(report, args.format, args.out)
    return EXIT_OK if passed else EXIT_FAIL


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="gammasect", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="certify the inequality catalog")
    pv.add_argument("--cases", default="all", help="comma-separated ids or 'all'")
    pv.add_argument("--x-max", type=float, default=100.0)
    pv.add_argument("--y-max", type=float, default=100.0)
    pv.add_argument("--n-max", type=int, default=60)
    pv.add_argument("--depth", type=int, default=40)
    pv.add_argument("--grid", type=int, default=2048)
    pv.add_argument("--format", choices=("json", "csv"), default="json")
    pv.add_argument("--out", default=None)
    if _mutate_enabled():
        # test-build hook: adversely perturb every selected constant
        pv.add_argument("--mutate", type=float, default=0.0)
    pv.set_defaults(func=cmd_verify)

    pb = sub.add_parser("volume", help="closed-form volumes and bound constants")
    pb.add_argument("--n", type=int, default=2)
    pb.add_argument("--p", type=float, default=2.0)
    pb.add_argument("--psum", default=None, help='p-sum spec, e.g. "2:e,2:e"')
    pb.add_argument(
        "--quantity",
        default="volume",
        help="volume|isotropy|hensley|ellipsoid:k|lowp|diag",
    )
    pb.add_argument("--format", choices=("json", "csv"), default="json")
    pb.add_argument("--out", default=None)
    pb.set_defaults(func=cmd_volume)

    ps = sub.add_parser("sections", help="Monte Carlo minimum-section experiments")
    ps.add_argument("--n", type=int, default=3)
    ps.add_argument("--p", type=float, default=2.0)
    ps.add_argument("--psum", default=None)
    ps.add_argument("--k", type=int, default=1)
    ps.add_argument("--trials", type=int, default=10)
    ps.add_argument("--samples", type=int, default=100000)
    ps.add_argument("--seed", type=int, default=0)
    ps.add_argument("--check", choices=("eq1", "prop25", "none"), default="none")
    ps.add_argument("--format", choices=("json", "csv"), default="json")
    ps.add_argument("--out", default=None)
    ps.set_defaults(func=cmd_sections)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
