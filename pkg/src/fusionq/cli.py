"""Command-line frontend: ring export, verification runs, S-matrix export.

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 numeric
degradation.  File outputs are deterministic: re-running a command with
the same arguments produces byte-identical files.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .cartan import DynkinType, build_root_system
from .fusion import FusionContext, fusion_product
from .qsystem import (
    ConjectureReport,
    KRDataUnavailableError,
    WGrid,
    check_conjecture,
    boundary_check,
    generate_w_grid,
    kns_report,
    restricted_solution,
)
from .smatrix import NumericDegradationError, OracleUnavailableError, build_smatrix

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3


class UsageError(Exception):
    pass


def _context(args):
    if args.level < 2:
        raise UsageError(f"level must be >= 2, got {args.level}")
    try:
        rs = build_root_system(DynkinType(args.family, args.rank))
    except ValueError as e:
        raise UsageError(str(e))
    cache_dir = os.environ.get("FUSIONQ_CACHE_DIR") or None
    return FusionContext(rs, args.level, cache_dir=cache_dir)


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _weight_label(w):
    return ".".join(str(c) for c in w)


def cmd_ring(args):
    """Write the basis listing and the full pairwise fusion-product table."""
    ctx = _context(args)
    products = []
    for i, u in enumerate(ctx.basis):
        eu = ctx.basis_element(u)
        for j, v in enumerate(ctx.basis):
            prod = fusion_product(ctx, eu, ctx.basis_element(v))
            products.append(
                {
                    "i": i,
                    "j": j,
                    "terms": [
                        {"w": list(w), "c": c} for w, c in prod.terms.items()
                    ],
                }
            )
    obj = {
        "family": ctx.rs.type.family,
        "rank": ctx.rs.rank,
        "level": ctx.level,
        "basis": [list(w) for w in ctx.basis],
        "products": products,
    }
    ctx.save_cache()
    _emit(json.dumps(obj, separators=(",", ":")) + "\n", args.out)
    return EXIT_OK


def _unsupported_report(ctx, check, message):
    rep = ConjectureReport(
        check=check,
        family=ctx.rs.type.family,
        rank=ctx.rs.rank,
        level=ctx.level,
    )
    rep.items.append({"id": "grid", "vertex": None, "m": None, "status": "unsupported"})
    rep.notes.append(message)
    return rep


def cmd_verify(args):
    """Run the full verification battery and write the combined report."""
    ctx = _context(args)
    horizon = None if args.horizon in (None, "auto") else int(args.horizon)
    if args.threads and args.threads > 1:
        grid = generate_w_grid(ctx, horizon=horizon, threads=args.threads)
    else:
        grid = WGrid(ctx)
    reports = [check_conjecture(ctx, horizon=horizon, grid=grid)]
    reports.append(boundary_check(ctx))
    solution = None
    try:
        solution = restricted_solution(ctx, grid=grid)
        reports.append(solution.report)
    except KRDataUnavailableError as e:
        reports.append(_unsupported_report(ctx, "restricted", str(e)))
    try:
        if solution is None:
            raise KRDataUnavailableError("no restricted solution available")
        kns = kns_report(ctx, grid=grid, solution=solution, tol=args.tol)
        reports.append(kns.report)
    except (KRDataUnavailableError, OracleUnavailableError) as e:
        reports.append(_unsupported_report(ctx, "kns", str(e)))
    ctx.save_cache()
    obj = [rep.to_obj() for rep in reports]
    _emit(json.dumps(obj, separators=(",", ":")) + "\n", args.out)
    ok = all(rep.ok for rep in reports)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_smatrix(args):
    """Write the S-matrix as CSV and print the unitarity residual."""
    ctx = _context(args)
    try:
        sm = build_smatrix(ctx, zero_tol=args.tol)
    except OracleUnavailableError as e:
        raise UsageError(str(e))
    residual = sm.unitarity_residual()
    if args.format == "json":
        obj = {
            "family": ctx.rs.type.family,
            "rank": ctx.rs.rank,
            "level": ctx.level,
            "basis": [list(w) for w in ctx.basis],
            "matrix": [
                [[f"{z.real:.15g}", f"{z.imag:.15g}"] for z in row]
                for row in sm.matrix
            ],
            "unitarity_residual": f"{residual:.6g}",
        }
        _emit(json.dumps(obj, separators=(",", ":")) + "\n", args.out)
    else:
        rows = [[_weight_label(w[1:]) for w in ctx.basis]]
        for row in sm.matrix:
            rows.append([f"{z.real:.15g},{z.imag:.15g}" for z in row])
        if args.out:
            with open(args.out, "w", newline="") as fh:
                csv.writer(fh, lineterminator="\n").writerows(rows)
        else:
            csv.writer(sys.stdout, lineterminator="\n").writerows(rows)
    print(f"unitarity residual {residual:.3e}", file=sys.stderr)
    if residual > args.tol:
        return EXIT_NUMERIC
    return EXIT_OK


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="fusionq",
        description="Exact WZW fusion rings and their Q-system verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--family", required=True, choices=list("ABCDEFG"))
        p.add_argument("--rank", required=True, type=int)
        p.add_argument("--level", required=True, type=int)
        p.add_argument("--horizon", default="auto",
                       help="grid horizon, an integer or 'auto'")
        p.add_argument("--out", default=None, help="output file (default stdout)")
        p.add_argument("--format", default="json", choices=["json", "csv"])
        p.add_argument("--tol", default=1e-9, type=float)
        p.add_argument("--threads", default=None, type=int)

    common(sub.add_parser("ring", help="export basis and fusion-product table"))
    common(sub.add_parser("verify", help="run the verification battery"))
    common(sub.add_parser("smatrix", help="export the modular S-matrix"))
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.horizon != "auto":
        try:
            int(args.horizon)
        except ValueError:
            parser.error(f"--horizon must be an integer or 'auto', got {args.horizon}")
    handler = {"ring": cmd_ring, "verify": cmd_verify, "smatrix": cmd_smatrix}[
        args.command
    ]
    try:
        return handler(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except NumericDegradationError as e:
        print(f"numeric degradation: {e}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
