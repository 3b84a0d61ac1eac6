#!/usr/bin/env python3
"""
Command-line front end.

    linespace convert --xi 1 --eta 0 --r 3
    linespace convert --point 0,0,1 --xi 1
    linespace sample --surface ellipsoid --a1 1 --a2 4 --a3 9 --grid two-chart --out-csv e.csv
    linespace verify all --seed 7 --report-json report.json

Structured output goes to stdout, status lines to stderr.
"""

import argparse
import cmath
import json
import math
import sys
import warnings
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from linespace.congruences import (
    BRANCH_MINUS,
    BRANCH_PLUS,
    EllipsoidParams,
    LineSection,
    TorusParams,
    ellipsoid_section,
    point_sphere_section,
    reconstruct,
    round_sphere_section,
    torus_section,
)
from linespace.core import (
    CHART_NORTH,
    CHART_SOUTH,
    INFINITY,
    ORIGIN,
    EuclideanPoint,
    ExtComplex,
    LinePoint,
    OrientedLine,
    line_point,
    lines_through_point,
)
from linespace.errors import GeometryWarning, LinespaceError
from linespace.utils.config import load_config
from linespace.utils.export import csv_text, results_to_frame, write_csv, write_obj
from linespace.utils.grids import GRID_DISK, GRID_KINDS, GridSpec
from linespace.utils.suites import SUITE_ALL, SUITE_NAMES, run_suite

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_PARAMETER = 3

SURFACE_SPHERE = "sphere"
SURFACE_ELLIPSOID = "ellipsoid"
SURFACE_TORUS = "torus"
SURFACES = (SURFACE_SPHERE, SURFACE_ELLIPSOID, SURFACE_TORUS)

INFINITY_SPELLINGS = ("inf", "+inf", "infinity", "∞")

# Namespace entries that a config file may not set
RESERVED_KEYS = ("command", "handler", "config")


def parse_xi(text: str) -> ExtComplex:
    """Parse a point of the extended complex plane: ``1+2i``, ``1+2j``, ``-0.5``, ``inf``."""
    cleaned = text.strip().lower().replace(" ", "")
    if cleaned in INFINITY_SPELLINGS:
        return INFINITY
    try:
        value = complex(cleaned.replace("i", "j"))
        return ExtComplex(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"not a complex number or 'inf': {text!r}") from e


def parse_complex(text: str) -> complex:
    """Parse a finite complex number."""
    try:
        value = complex(text.strip().lower().replace(" ", "").replace("i", "j"))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from e
    if not cmath.isfinite(value):
        raise argparse.ArgumentTypeError(f"complex number must be finite: {text!r}")
    return value


def parse_real(text: str) -> float:
    """Parse a finite real number."""
    try:
        value = float(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"not a real number: {text!r}") from e
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"real number must be finite: {text!r}")
    return value


def parse_point(text: str) -> Tuple[float, float, float]:
    """Parse ``x,y,t``."""
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"point must be x,y,t, got {text!r}")
    return tuple(parse_real(part) for part in parts)


def _as_point(value: Tuple[float, float, float]) -> EuclideanPoint:
    x, y, t = value
    return EuclideanPoint.from_xyz(x, y, t)


def _status(message: str):
    print(message, file=sys.stderr)


def build_parser() -> Tuple[argparse.ArgumentParser, Dict[str, argparse.ArgumentParser]]:
    """Build the top-level parser and return it with its subcommand parsers."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config",
        help="JSON file of option defaults (keys are option names); flags take precedence",
    )

    parser = argparse.ArgumentParser(
        prog="linespace",
        description="Oriented lines in R^3 as points of TS^2, and normal congruences of surfaces.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    convert = subparsers.add_parser(
        "convert",
        parents=[common],
        help="Convert between (xi, eta, r) and Euclidean points",
        description="Print the point at (xi, eta, r), or with --point the (eta, r) of the line "
        "through that point in direction xi.",
    )
    convert.add_argument("--xi", type=parse_xi, help="Direction, e.g. 1+2i or inf")
    convert.add_argument("--eta", type=parse_complex, default=0j, help="Fibre coordinate")
    convert.add_argument("--r", type=parse_real, default=0.0, help="Affine parameter")
    convert.add_argument("--point", type=parse_point, help="Euclidean point x,y,t")
    convert.add_argument(
        "--chart", type=int, choices=(CHART_NORTH, CHART_SOUTH), default=CHART_NORTH
    )
    convert.set_defaults(handler=cmd_convert)

    sample = subparsers.add_parser(
        "sample",
        parents=[common],
        help="Sample a surface section over a grid and export the point cloud",
    )
    sample.add_argument("--surface", choices=SURFACES, default=SURFACE_SPHERE)
    sample.add_argument(
        "--point", type=parse_point, help="Sphere centre x,y,t (default: the origin)"
    )
    sample.add_argument(
        "--radius", type=parse_real, default=0.0, help="Sphere radius; 0 is the point sphere"
    )
    sample.add_argument("--a1", type=parse_real, default=1.0, help="Ellipsoid x^2 denominator")
    sample.add_argument("--a2", type=parse_real, default=1.0, help="Ellipsoid y^2 denominator")
    sample.add_argument("--a3", type=parse_real, default=1.0, help="Ellipsoid t^2 denominator")
    sample.add_argument("--a", type=parse_real, default=2.0, help="Torus centre-circle radius")
    sample.add_argument("--b", type=parse_real, default=1.0, help="Torus tube radius")
    sample.add_argument("--branch", choices=(BRANCH_PLUS, BRANCH_MINUS), default=BRANCH_PLUS)
    sample.add_argument("--grid", choices=GRID_KINDS, default=GRID_DISK)
    sample.add_argument("--radial-count", type=int, default=8)
    sample.add_argument("--angular-count", type=int, default=16)
    sample.add_argument("--max-modulus", type=parse_real, default=1.0)
    sample.add_argument("--inner-radius", type=parse_real, default=None)
    sample.add_argument("--out-csv", help="CSV output path (default: stdout)")
    sample.add_argument("--out-obj", help="OBJ point-cloud output path")
    sample.add_argument("--seed", type=int, default=0, help="Unused; the grids are deterministic")
    sample.set_defaults(handler=cmd_sample)

    verify = subparsers.add_parser(
        "verify",
        parents=[common],
        help="Run the seeded property suites",
    )
    verify.add_argument("suite", nargs="?", choices=SUITE_NAMES + (SUITE_ALL,), default=SUITE_ALL)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--tol", type=parse_real, default=None, help="Override every tolerance")
    verify.add_argument("--report-json", help="Write the report as JSON")
    verify.set_defaults(handler=cmd_verify)

    return parser, {"convert": convert, "sample": sample, "verify": verify}


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """Parse arguments, filling unset options from ``--config``."""
    parser, subparsers = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(argv)
    if not args.config:
        return args

    try:
        config = load_config(args.config)
    except (OSError, ValueError) as e:
        parser.error(f"could not read config: {e}")

    unknown = sorted(key for key in config if key not in vars(args) or key in RESERVED_KEYS)
    if unknown:
        parser.error(f"unknown keys in {args.config}: {', '.join(unknown)}")

    try:
        config = coerce_config(subparsers[args.command], config)
    except (argparse.ArgumentTypeError, TypeError, ValueError) as e:
        parser.error(f"invalid value in {args.config}: {e}")

    subparsers[args.command].set_defaults(**config)
    return parser.parse_args(argv)


def coerce_config(subparser: argparse.ArgumentParser, config: Dict[str, Any]) -> Dict[str, Any]:
    """
    Run config values through the ``type`` and ``choices`` of their options.

    Values are converted from their text form, so ``"a1": 4`` and ``"a1": "4"`` agree and a
    point may be given as ``[x, y, t]`` or ``"x,y,t"``.

    Raises:
        argparse.ArgumentTypeError: if a value is not among the option's choices
    """
    actions = {action.dest: action for action in subparser._actions}  # pylint: disable=W0212
    coerced = {}
    for key, value in config.items():
        action = actions[key]
        if value is not None and action.type is not None:
            if isinstance(value, (list, tuple)):
                value = ",".join(str(v) for v in value)
            value = action.type(str(value))
        if action.choices is not None and value not in action.choices:
            choices = ", ".join(str(choice) for choice in action.choices)
            raise argparse.ArgumentTypeError(
                f"{key}: invalid choice {value!r} (choose from {choices})"
            )
        coerced[key] = value
    return coerced


def _line_record(line: OrientedLine) -> dict:
    return {
        "chart": line.chart,
        "xi_re": line.w.real,
        "xi_im": line.w.imag,
        "eta_re": line.eta.real,
        "eta_im": line.eta.imag,
    }


def cmd_convert(args: argparse.Namespace) -> int:
    """Print one JSON record converting between line coordinates and R^3."""
    if args.xi is None:
        _status("❌ convert needs --xi")
        return EXIT_USAGE
    xi = args.xi

    if args.point is not None:
        p = _as_point(args.point)
        lp = lines_through_point(p, xi, args.chart)
        record = {"x": p.x, "y": p.y, "t": p.t, **_line_record(lp.line), "r": lp.r}
    else:
        line = OrientedLine(xi, complex(args.eta), args.chart)
        p = line_point(LinePoint(line, float(args.r)))
        record = {**_line_record(line), "r": float(args.r), "x": p.x, "y": p.y, "t": p.t}

    print(json.dumps(record))
    return EXIT_OK


def build_section(args: argparse.Namespace) -> Tuple[LineSection, List[str]]:
    """
    Build the section named by ``--surface``.

    Returns:
        The section and the messages of any GeometryWarning raised on the way
    """
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", GeometryWarning)
        if args.surface == SURFACE_ELLIPSOID:
            section = ellipsoid_section(EllipsoidParams(args.a1, args.a2, args.a3))
        elif args.surface == SURFACE_TORUS:
            section = torus_section(TorusParams(args.a, args.b, args.branch))
        else:
            center = ORIGIN if args.point is None else _as_point(args.point)
            if float(args.radius) == 0.0:
                section = point_sphere_section(center)
            else:
                section = round_sphere_section(center, args.radius)
    messages = [str(w.message) for w in caught if issubclass(w.category, GeometryWarning)]
    return section, messages


def cmd_sample(args: argparse.Namespace) -> int:
    """Sample a section over a grid and write CSV (and optionally OBJ)."""
    # Every parameter is checked before any output file is touched
    grid = GridSpec(
        kind=args.grid,
        radial_count=args.radial_count,
        angular_count=args.angular_count,
        max_modulus=args.max_modulus,
        inner_radius=args.inner_radius,
    )
    section, messages = build_section(args)
    for message in messages:
        _status(f"⚠️  {message}")

    _status(f"📐 Sampling {section.name} on a {grid.kind} grid ({len(grid)} samples)...")
    df = results_to_frame(reconstruct(section, grid.samples()))
    skipped = int(df["skipped"].sum())

    if args.out_csv:
        csv_path = write_csv(df, args.out_csv)
        _status(f"✅ Wrote {len(df)} rows to {csv_path}")
    else:
        sys.stdout.write(csv_text(df))
    if skipped:
        _status(f"  Skipped {skipped} samples at branch points")

    if args.out_obj:
        obj_path = write_obj(df, args.out_obj)
        _status(f"✅ Wrote {len(df) - skipped} vertices to {obj_path}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Run property suites; exit 0 iff every check passes."""
    report = run_suite(args.suite, seed=int(args.seed), tol=args.tol)
    print(report.to_text())

    if args.report_json:
        report_path = Path(args.report_json)
        report_path.parent.mkdir(parents=True, exist_ok=True)
        with open(report_path, "w", encoding="utf-8") as f:
            json.dump(report.to_dict(), f, indent=2)
        _status(f"📊 Report written to {report_path}")

    if report.passed:
        _status(f"✅ All {len(report.checks)} checks passed (seed {report.seed})")
        return EXIT_OK

    failed = ", ".join(f"{c.suite}/{c.name}" for c in report.failures)
    _status(f"❌ {len(report.failures)} of {len(report.checks)} checks failed: {failed}")
    return EXIT_VERIFICATION_FAILED


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Entry point of the ``linespace`` command.

    Exit status: 0 success, 1 verification failure, 2 usage error (including malformed
    config values), 3 invalid parameters or domain error.
    """
    try:
        args = parse_args(argv)
    except SystemExit as e:
        if e.code is None:
            return EXIT_OK
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        return args.handler(args)
    except LinespaceError as e:
        _status(f"❌ {e}")
        return EXIT_PARAMETER
    except (TypeError, ValueError) as e:
        # Value types reject non-finite input
        _status(f"❌ Invalid value: {e}")
        return EXIT_PARAMETER
    except OSError as e:
        _status(f"❌ Could not write output: {e}")
        return EXIT_PARAMETER


if __name__ == "__main__":
    sys.exit(main())
