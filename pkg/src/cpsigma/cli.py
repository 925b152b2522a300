"""Command-line front end: verify, table, surface, quadrature.

Exit codes: 0 success, 1 exact-check failure, 2 usage error, 3 I/O error,
4 numeric non-convergence.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import geometry
from .basis import BASIS_ID
from .model import ModelInstance
from .quadrature import QuadratureError
from .verify import (
    EXACT_MODE_CAP,
    STATUS_FAIL,
    SUITES,
    run_verification,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_NO_CONVERGENCE = 4


def _fmt(value: float) -> str:
    """Round-trippable decimal text for doubles."""
    return f"{value:.17g}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cpsigma",
        description=(
            "Exact verification and surface export for the Veronese/"
            "Krawtchouk solution family of projective sigma models."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the exact identity checks")
    verify.add_argument("--two-s", type=int, required=True)
    verify.add_argument("--k", default="all", help="level filter: integer or 'all'")
    verify.add_argument(
        "--suite", default="all", help=f"comma-separated from {', '.join(SUITES)}"
    )
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.add_argument("--out", help="also write the report to this path")

    table = sub.add_parser("table", help="print the per-level geometry table")
    table.add_argument("--two-s", type=int, required=True)
    table.add_argument("--format", choices=("text", "json"), default="text")
    table.add_argument("--out", help="write the table to this path")
    table.add_argument(
        "--plot", action="store_true", help="render a summary figure next to the output"
    )

    surface = sub.add_parser("surface", help="export surface samples")
    surface.add_argument("--two-s", type=int, required=True)
    surface.add_argument("--k", type=int, required=True)
    surface.add_argument("--grid", type=int, default=11, help="points per axis")
    surface.add_argument(
        "--radius", type=float, default=3.0, help="half-width of the sample square"
    )
    surface.add_argument("--format", choices=("csv", "json"), default="csv")
    surface.add_argument("--out", required=True)
    surface.add_argument(
        "--plot", action="store_true", help="render a 3D scatter next to the output"
    )

    quadrature = sub.add_parser(
        "quadrature", help="numeric action / Gauss-Bonnet integrals"
    )
    quadrature.add_argument("--two-s", type=int, required=True)
    quadrature.add_argument("--k", type=int, required=True)
    quadrature.add_argument(
        "--which", choices=("action", "gauss-bonnet"), required=True
    )
    quadrature.add_argument("--tol", type=float, default=1e-8)

    return parser


def _check_two_s(parser, two_s: int):
    if not 1 <= two_s <= EXACT_MODE_CAP:
        parser.error(f"--two-s must be in 1..{EXACT_MODE_CAP}")


def _check_level(parser, two_s: int, k: int):
    if not 0 <= k <= two_s:
        parser.error(f"--k must be in 0..{two_s}")


def cmd_verify(parser, args) -> int:
    _check_two_s(parser, args.two_s)
    k_filter = None
    if args.k != "all":
        try:
            level = int(args.k)
        except ValueError:
            parser.error("--k must be an integer or 'all'")
        _check_level(parser, args.two_s, level)
        k_filter = {level}
    suites = None
    if args.suite != "all":
        suites = [s.strip() for s in args.suite.split(",") if s.strip()]
        unknown = set(suites) - set(SUITES)
        if unknown:
            parser.error(f"unknown suite(s): {', '.join(sorted(unknown))}")
    report = run_verification(args.two_s, suites=suites, k_filter=k_filter)
    payload = json.dumps(report.to_dict(), indent=2)
    if args.format == "json":
        print(payload)
    else:
        for c in report.checks:
            detail = f"  ({c.detail})" if c.detail else ""
            print(f"[{c.status:>23}] {c.name} @ {c.subject}{detail}")
        print(
            f"{len(report.checks)} checks, {len(report.failed)} failed, "
            f"{report.wall_time_ms} ms"
        )
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(payload + "\n")
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_IO
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def geometry_rows(inst: ModelInstance) -> list[dict]:
    coincident = geometry.coincidence_check(inst)
    rows = []
    for k in range(inst.dim):
        r = geometry.radius(inst, k)
        curv = geometry.gauss_curvature(inst, k)
        cos_t = geometry.kahler_angle(inst, k)
        notes = [pair for pair in coincident if k in pair]
        rows.append(
            {
                "k": k,
                "radius_squared": str(r.radius_squared),
                "radius_squared_value": float(r.radius_squared),
                "printed_radius_polynomial": str(r.printed_closed_form),
                "printed_polynomial_matches": r.matches,
                "gauss_curvature": str(curv),
                "gauss_curvature_value": float(curv),
                "cos_kahler": str(cos_t),
                "cos_kahler_value": float(cos_t),
                "action_coefficient": str(geometry.metric_coefficient(inst, k)),
                "coincides_with": [list(p) for p in notes],
            }
        )
    return rows


def cmd_table(parser, args) -> int:
    _check_two_s(parser, args.two_s)
    inst = ModelInstance(args.two_s)
    rows = geometry_rows(inst)
    if args.format == "json":
        text = json.dumps({"two_s": args.two_s, "rows": rows}, indent=2)
    else:
        lines = [
            f"{'k':>3} {'R^2':>8} {'K':>8} {'cos(theta)':>11} "
            f"{'action coeff':>13} coincides"
        ]
        for r in rows:
            notes = ",".join(str(tuple(p)) for p in r["coincides_with"]) or "-"
            lines.append(
                f"{r['k']:>3} {r['radius_squared']:>8} {r['gauss_curvature']:>8} "
                f"{r['cos_kahler']:>11} {r['action_coefficient']:>13} {notes}"
            )
        text = "\n".join(lines)
    print(text)
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_IO
    if args.plot:
        from .plotting import plot_geometry_table

        target = (args.out or f"geometry_table_two_s_{args.two_s}") + ".png"
        try:
            plot_geometry_table(rows, target)
        except OSError as exc:
            print(f"error: cannot write {target}: {exc}", file=sys.stderr)
            return EXIT_IO
    return EXIT_OK


def surface_csv(samples) -> str:
    m = len(samples.samples[0].coords)
    lines = [
        f"# two_s={samples.instance.two_s} k={samples.k} basis={samples.basis_id}"
        f" radius_sq={samples.radius_squared}",
        "xi1,xi2," + ",".join(f"c_{a + 1}" for a in range(m)) + ",metric_density",
    ]
    for s in samples.samples:
        fields = [_fmt(s.xi1), _fmt(s.xi2)]
        fields.extend(_fmt(c) for c in s.coords)
        fields.append(_fmt(s.metric_density))
        lines.append(",".join(fields))
    return "\n".join(lines) + "\n"


def surface_json(samples) -> str:
    m = len(samples.samples[0].coords)
    return json.dumps(
        {
            "two_s": samples.instance.two_s,
            "k": samples.k,
            "grid": samples.grid,
            "radius_bound": samples.radius_bound,
            "basis": samples.basis_id,
            "radius_squared": str(samples.radius_squared),
            "columns": ["xi1", "xi2"]
            + [f"c_{a + 1}" for a in range(m)]
            + ["metric_density"],
            "rows": [
                [s.xi1, s.xi2, *s.coords, s.metric_density]
                for s in samples.samples
            ],
        },
        indent=2,
    )


def cmd_surface(parser, args) -> int:
    _check_two_s(parser, args.two_s)
    _check_level(parser, args.two_s, args.k)
    if args.grid < 2:
        parser.error("--grid must be at least 2")
    if args.radius <= 0:
        parser.error("--radius must be positive")
    inst = ModelInstance(args.two_s)
    samples = geometry.sample_surface(inst, args.k, args.grid, args.radius)
    text = surface_csv(samples) if args.format == "csv" else surface_json(samples)
    try:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    if args.plot:
        from .plotting import plot_surface

        try:
            plot_surface(samples, args.out + ".png")
        except OSError as exc:
            print(f"error: cannot write {args.out}.png: {exc}", file=sys.stderr)
            return EXIT_IO
    print(f"wrote {len(samples.samples)} samples to {args.out}")
    return EXIT_OK


def cmd_quadrature(parser, args) -> int:
    _check_two_s(parser, args.two_s)
    _check_level(parser, args.two_s, args.k)
    if args.tol <= 0:
        parser.error("--tol must be positive")
    inst = ModelInstance(args.two_s)
    try:
        if args.which == "action":
            value = geometry.total_action(inst, args.k, args.tol)
            expected = geometry.expected_action(inst, args.k)
        else:
            value = geometry.gauss_bonnet(inst, args.k, args.tol)
            expected = 2.0
    except QuadratureError as exc:
        print(
            f"error: quadrature did not converge (partial estimate "
            f"{_fmt(exc.estimate)})",
            file=sys.stderr,
        )
        return EXIT_NO_CONVERGENCE
    print(f"computed: {_fmt(value)}")
    print(f"expected: {_fmt(expected)}")
    print(f"abs error: {_fmt(abs(value - expected))}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "verify": cmd_verify,
        "table": cmd_table,
        "surface": cmd_surface,
        "quadrature": cmd_quadrature,
    }
    return handlers[args.command](parser, args)


if __name__ == "__main__":
    sys.exit(main())
