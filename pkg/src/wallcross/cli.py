"""Command-line interface.

Subcommands:
  tilt-wall  candidate destabilizing pairs and their wall circles
  lambda     extended-slope wall data and chamber at a point
  plot       CSV (optionally SVG) sampling of the wall picture
  ideals     run the flat-limit verification suite
  chow       Todd class / pushforward / Mori pairings

Exit codes: 0 on success, 1 when a verification suite reports a failing
check, 2 on invalid input.  All output is deterministic: exact rationals, or
12-significant-digit decimals in plot sampling.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .chern import ChernCharacter, StabilityPoint, skew_lines_ideal, twist
from .exact import parse_rational
from .idealsuite import parse_manifest, run_family_scenario, run_paper_suite
from .lambdawalls import (
    actual_walls,
    classify_chamber,
    evaluate_wall,
    phi_alpha_derivative_at,
    sample_wall,
    wall_slope_at,
)
from .tiltwalls import Circle, enumerate_destabilizers, nu_wall, nu_zero_locus

__all__ = ["main"]


def _parse_point(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"a point is alpha,beta — got {text!r}")
    return parse_rational(parts[0]), parse_rational(parts[1])


def _chern_json(v: ChernCharacter) -> list[str]:
    return [str(c) for c in v.components()]


def _emit(args: argparse.Namespace, text_lines: list[str], payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text_lines))


# ---------------------------------------------------------------------------
# tilt-wall
# ---------------------------------------------------------------------------

def cmd_tilt_wall(args: argparse.Namespace) -> int:
    v = ChernCharacter.parse(args.chern)
    beta0 = parse_rational(args.beta0)
    candidates = enumerate_destabilizers(v, beta0, args.rank_bound)
    lines = [
        f"character {v} at beta0 = {beta0}: "
        f"{len(candidates)} candidate pair{'s' if len(candidates) != 1 else ''}"
    ]
    pairs_json = []
    for i, cand in enumerate(candidates, 1):
        sub = ChernCharacter(cand.r, cand.c, cand.d, 0)
        quot = ChernCharacter(*cand.complement, 0)
        wall = nu_wall(twist(sub, -beta0), twist(quot, -beta0))
        lines.append(
            f"pair {i}: sub (r, c, d) = ({cand.r}, {cand.c}, {cand.d}), "
            f"quotient = ({cand.complement[0]}, {cand.complement[1]}, "
            f"{cand.complement[2]}), alpha^2 = {cand.alpha_sq}"
        )
        lines.append(f"  wall: {wall}")
        pairs_json.append({
            "sub": [str(cand.r), str(cand.c), str(cand.d)],
            "quotient": [str(x) for x in cand.complement],
            "alpha_sq": str(cand.alpha_sq),
            "wall": wall.to_json(),
        })
    payload = {
        "chern": _chern_json(v),
        "beta0": str(beta0),
        "rank_bound": args.rank_bound,
        "pairs": pairs_json,
    }
    _emit(args, lines, payload)
    return 0


# ---------------------------------------------------------------------------
# lambda
# ---------------------------------------------------------------------------

_WALL_DESCRIPTIONS = {
    "W1": "line bundle O(-1) vs planar point ideal I_{P/V}(-2)",
    "W2": "point ideal I_P(-1) vs plane bundle O_V(-2)",
}


def cmd_lambda(args: argparse.Namespace) -> int:
    v = ChernCharacter.parse(args.chern)
    if v != skew_lines_ideal():
        raise ValueError(
            f"lambda walls are computed for the character {skew_lines_ideal()} "
            f"only, got {v}"
        )
    s = parse_rational(args.s)
    alpha, beta = _parse_point(args.at)
    point = StabilityPoint(alpha, beta, s)
    lines = [f"at (alpha, beta) = ({alpha}, {beta}), s = {s}:"]
    walls_json = []
    for wall in actual_walls():
        phi = evaluate_wall(wall, point)
        derivative = phi_alpha_derivative_at(wall, point)
        entry = {
            "name": wall.name,
            "phi": str(phi),
            "alpha_derivative": str(derivative),
        }
        try:
            slope = wall_slope_at(wall, point)
            slope_text = f"slope = {slope}"
            entry["slope"] = str(slope)
        except ValueError as exc:
            note = "not on wall" if "not on the wall" in str(exc) else "vertical tangent"
            slope_text = note
            entry["slope"] = None
            entry["note"] = note
        lines.append(
            f"{wall.name} [{_WALL_DESCRIPTIONS[wall.name]}]: phi = {phi}, "
            f"d(phi)/d(alpha) = {derivative}, {slope_text}"
        )
        walls_json.append(entry)
    chamber = classify_chamber(v, point)
    lines.append(f"chamber: {chamber}")
    payload = {
        "chern": _chern_json(v),
        "s": str(s),
        "at": [str(alpha), str(beta)],
        "walls": walls_json,
        "chamber": str(chamber),
    }
    _emit(args, lines, payload)
    return 0


# ---------------------------------------------------------------------------
# plot
# ---------------------------------------------------------------------------

def _plot_rows(args: argparse.Namespace) -> list[tuple[str, str, str]]:
    v = ChernCharacter.parse(args.chern)
    if v != skew_lines_ideal():
        raise ValueError(
            f"the wall picture is computed for the character "
            f"{skew_lines_ideal()} only, got {v}"
        )
    s = parse_rational(args.s)
    if s <= 0:
        raise ValueError(f"parameter s must be positive, got {s}")
    beta_min = parse_rational(args.beta_min)
    beta_max = parse_rational(args.beta_max)
    count = args.samples
    rows: list[tuple[str, str, str]] = []

    beta0 = Fraction(-2)
    walls = []
    for cand in enumerate_destabilizers(v, beta0, 10):
        sub = ChernCharacter(cand.r, cand.c, cand.d, 0)
        quot = ChernCharacter(*cand.complement, 0)
        locus = nu_wall(twist(sub, -beta0), twist(quot, -beta0))
        if isinstance(locus, Circle) and locus not in walls:
            walls.append(locus)
    for locus in walls:
        for b, a in sample_wall(locus, None, beta_min, beta_max, count):
            rows.append(("W", b, a))
    w1, w2 = actual_walls()
    for b, a in sample_wall(w1, s, beta_min, beta_max, count):
        rows.append(("W1", b, a))
    for b, a in sample_wall(w2, s, beta_min, beta_max, count):
        rows.append(("W2", b, a))
    for b, a in sample_wall(nu_zero_locus(v), None, beta_min, beta_max, count):
        rows.append(("hyperbola", b, a))
    return rows


def _write_svg(path: str, rows: list[tuple[str, str, str]]) -> None:
    from decimal import Decimal

    colors = {"W": "#888888", "W1": "#1f77b4", "W2": "#d62728",
              "hyperbola": "#2ca02c"}
    points = [(name, Decimal(b), Decimal(a)) for name, b, a in rows]
    xs = [p[1] for p in points]
    ys = [p[2] for p in points]
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = Decimal(0), max(ys)
    width, height, margin = 640, 480, 48
    xspan = xmax - xmin or Decimal(1)
    yspan = ymax - ymin or Decimal(1)

    def sx(x: Decimal) -> float:
        return margin + float((x - xmin) / xspan) * (width - 2 * margin)

    def sy(y: Decimal) -> float:
        return height - margin - float((y - ymin) / yspan) * (height - 2 * margin)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<text x="{width // 2}" y="{height - 12}" font-size="13" '
        f'text-anchor="middle">beta</text>',
        f'<text x="14" y="{height // 2}" font-size="13" text-anchor="middle" '
        f'transform="rotate(-90 14 {height // 2})">alpha</text>',
    ]
    for i, (name, color) in enumerate(colors.items()):
        parts.append(
            f'<circle cx="{width - margin - 110}" cy="{margin + 16 * i}" '
            f'r="3" fill="{color}"/>'
            f'<text x="{width - margin - 100}" y="{margin + 16 * i + 4}" '
            f'font-size="12">{name}</text>'
        )
    for name, x, y in points:
        parts.append(
            f'<circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="2.2" '
            f'fill="{colors[name]}"/>'
        )
    parts.append("</svg>")
    with open(path, "w") as fh:
        fh.write("\n".join(parts) + "\n")


def cmd_plot(args: argparse.Namespace) -> int:
    rows = _plot_rows(args)
    csv_lines = ["wall,beta,alpha"] + [",".join(row) for row in rows]
    text = "\n".join(csv_lines) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise ValueError(f"cannot write {args.out!r}: {exc}") from exc
    if args.svg:
        try:
            _write_svg(args.svg, rows)
        except OSError as exc:
            raise ValueError(f"cannot write {args.svg!r}: {exc}") from exc
    return 0


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------

def cmd_ideals(args: argparse.Namespace) -> int:
    if args.suite == "paper":
        reports = run_paper_suite()
    else:
        try:
            with open(args.suite) as fh:
                text = fh.read()
        except OSError as exc:
            raise ValueError(f"cannot read manifest {args.suite!r}: {exc}") from exc
        scenarios = parse_manifest(text)
        if not scenarios:
            raise ValueError(f"manifest {args.suite!r} contains no scenarios")
        reports = tuple(run_family_scenario(sc) for sc in scenarios)
    lines = []
    all_passed = True
    for report in reports:
        mark = "PASS" if report.passed else "FAIL"
        all_passed = all_passed and report.passed
        lines.append(f"{report.scenario}: {mark} ({len(report.steps)} steps)"
                     + (f" - {report.anchor}" if report.anchor else ""))
        for step in report.steps:
            if not step.passed:
                lines.append(f"  failed: {step.description}")
                lines.append(f"    computed: {', '.join(step.computed)}")
                lines.append(f"    expected: {', '.join(step.expected)}")
    lines.append("all scenarios passed" if all_passed else "some scenarios FAILED")
    payload = [report.to_json() for report in reports]
    _emit(args, lines, payload)
    return 0 if all_passed else 1


# ---------------------------------------------------------------------------
# chow
# ---------------------------------------------------------------------------

def cmd_chow(args: argparse.Namespace) -> int:
    from .chow import grr_c1_pushforward, mori_report, todd_p3

    if args.what == "todd":
        cls = todd_p3()
        lines = [str(cls)]
        payload = {
            "class": str(cls),
            "h_coefficients": [str(cls.coefficient(i, 0)) for i in range(4)],
        }
    elif args.what == "c1e":
        cls = grr_c1_pushforward()
        lines = [str(cls)]
        payload = {
            "class": str(cls),
            "hprime_coefficients": [str(cls.coefficient(0, j)) for j in range(4)],
        }
    else:  # mori
        report = mori_report()
        lines = [
            f"K = ({', '.join(str(c) for c in report.K.components())}) "
            f"over (H, H', A, E')",
        ]
        for name in ("epsilon", "eta", "zeta", "delta"):
            ray = report.rays[name]
            lines.append(
                f"pair(K, {name}) = {report.pairings[name]}  "
                f"[{name} = ({', '.join(str(c) for c in ray.components())})]"
            )
        lines.append(f"K-negative rays: {', '.join(report.negative_rays)}")
        lines.append(f"K-positive rays: {', '.join(report.positive_rays)}")
        lines.append(f"contraction of zeta: {report.contraction_of_zeta}")
        payload = report.to_json()
    _emit(args, lines, payload)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wallcross",
        description="Exact wall-and-chamber calculator with a flat-limit "
                    "verification suite and Chow-ring helpers.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default: text)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tilt-wall", parents=[common],
                       help="candidate destabilizing pairs along a vertical line")
    p.add_argument("--chern", default="1,0,-2,2",
                   help="character ch0,ch1,ch2,ch3 (default: 1,0,-2,2)")
    p.add_argument("--beta0", default="-2",
                   help="integer twist for the search line (default: -2)")
    p.add_argument("--rank-bound", type=int, default=10,
                   help="search |rank| up to this bound (default: 10)")
    p.set_defaults(func=cmd_tilt_wall)

    p = sub.add_parser("lambda", parents=[common],
                       help="extended-slope wall data and chamber at a point")
    p.add_argument("--chern", default="1,0,-2,2",
                   help="character (must be 1,0,-2,2)")
    p.add_argument("--s", required=True, help="positive rational parameter s")
    p.add_argument("--at", required=True, help="point alpha,beta")
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("plot", parents=[common],
                       help="sample the wall picture to CSV (and optional SVG)")
    p.add_argument("--chern", default="1,0,-2,2",
                   help="character (must be 1,0,-2,2)")
    p.add_argument("--s", default="1/3", help="parameter s (default: 1/3)")
    p.add_argument("--beta-min", default="-4", help="left edge (default: -4)")
    p.add_argument("--beta-max", default="-2", help="right edge (default: -2)")
    p.add_argument("--samples", type=int, default=41,
                   help="evenly spaced beta samples (default: 41)")
    p.add_argument("--out", default="-",
                   help="CSV output path, - for stdout (default: -)")
    p.add_argument("--svg", default=None, help="also write an SVG scatter here")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("ideals", parents=[common],
                       help="run the flat-limit verification suite")
    p.add_argument("--suite", default="paper",
                   help="'paper' for the built-in suite, or a manifest path")
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("chow", parents=[common],
                       help="Todd class, pushforward, Mori pairings")
    p.add_argument("what", choices=("todd", "c1e", "mori"))
    p.set_defaults(func=cmd_chow)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
