"""Command-line interface.

Subcommands: count, table, enumerate, verify, fagnano, render.  Output is
deterministic (identical invocations produce identical bytes) in three
formats: human-readable text (default), JSON (one object with a "results"
array), and CSV.  Exact rationals appear as "p/q" strings.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 trajectory
hits a corner (singular offset), 4 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import counting
from .billiard import (
    TriangleConfig,
    VertexHit,
    bounce_labels,
    default_offset,
    fundamental_period,
    simulate_fagnano,
    trace_class,
    verify_class,
)
from .orbits import (
    OrbitClass,
    angle_profile,
    enumerate_classes,
    is_primitive,
    iterate_decomposition,
    length,
    length_squared,
    period,
)
from .render import render_folded, render_unfolded

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_VERTEX = 3
EXIT_IO = 4


def _fraction_arg(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational 'p/q': {text}") from exc
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return round(value, 6)
    return value


def _emit(fmt: str, rows: list[dict], human_lines: list[str]) -> None:
    if fmt == "human":
        for line in human_lines:
            print(line)
    elif fmt == "json":
        payload = {"results": [{k: _jsonable(v) for k, v in row.items()} for row in rows]}
        print(json.dumps(payload, indent=2))
    else:
        if not rows:
            return
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(rows[0].keys())
        for row in rows:
            writer.writerow(
                "true" if v is True else "false" if v is False else _jsonable(v)
                for v in row.values()
            )
        sys.stdout.write(buffer.getvalue())


def _cmd_count(args: argparse.Namespace) -> int:
    if args.primitive:
        value, kind = counting.count_primitive(args.n), "P"
    else:
        value, kind = counting.count_classes(args.n), "O"
    _emit(
        args.format,
        [{"n": args.n, "kind": kind, "count": value}],
        [f"{kind}({args.n})={value}"],
    )
    return EXIT_OK


def _cmd_table(args: argparse.Namespace) -> int:
    rows = [
        {"n": r.n, "period": r.period, "O": r.classes, "P": r.primitive}
        for r in counting.table(args.max)
    ]
    human = [f"{'n':>4} {'period':>7} {'O':>4} {'P':>4}"]
    human.extend(
        f"{r['n']:>4} {r['period']:>7} {r['O']:>4} {r['P']:>4}" for r in rows
    )
    _emit(args.format, rows, human)
    return EXIT_OK


def _class_row(c: OrbitClass) -> dict:
    profile = angle_profile(c)
    deco = iterate_decomposition(c)
    return {
        "x": c.x,
        "y": c.y,
        "period": period(c),
        "length_squared": length_squared(c),
        "length": length(c),
        "primitive": is_primitive(c),
        "repeats": deco.repeats,
        "base_x": deco.base.x,
        "base_y": deco.base.y,
        "angle_kind": profile.kind.value,
        "theta_tan_sq": profile.theta.tan_sq,
        "theta_deg": profile.theta_deg,
        "phi_deg": profile.phi_deg,
        "psi_deg": profile.psi_deg,
    }


def _cmd_enumerate(args: argparse.Namespace) -> int:
    rows = [_class_row(c) for c in enumerate_classes(args.n)]
    human = []
    for r in rows:
        if r["primitive"]:
            origin = "primitive"
        else:
            origin = f"{r['repeats']}x({r['base_x']},{r['base_y']})"
        human.append(
            f"({r['x']},{r['y']})  period {r['period']}  length^2 {r['length_squared']}"
            f"  {origin}  theta {r['theta_deg']:.3f} deg  [{r['angle_kind']}]"
        )
    if not rows:
        human = [f"no orbit classes of period {2 * args.n}"]
    _emit(args.format, rows, human)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if len(args.spec) == 1:
        classes = enumerate_classes(args.spec[0])
        if not classes:
            _emit(args.format, [], [f"no orbit classes of period {2 * args.spec[0]}"])
            return EXIT_OK
    elif len(args.spec) == 2:
        classes = [OrbitClass(args.spec[0], args.spec[1]).validate()]
    else:
        raise ValueError("verify takes n, or x y")

    rows, human = [], []
    all_passed = True
    for c in classes:
        report = verify_class(c, args.b)
        all_passed &= report.passed
        rows.append(
            {
                "x": c.x,
                "y": c.y,
                "offset": report.offset,
                "period": report.expected_period,
                "bounces": report.path.bounce_count,
                "closed": report.path.closed,
                "repeats": report.repeats,
                "fundamental": report.expected_fundamental,
                "first_closure": report.first_closure,
                "passed": report.passed,
            }
        )
        verdict = "PASS" if report.passed else "FAIL"
        failing = [name for name, ok in report.checks if not ok]
        detail = "" if report.passed else f"  failing: {', '.join(failing)}"
        human.append(
            f"({c.x},{c.y}) offset {report.offset}: {report.path.bounce_count} bounces,"
            f" fundamental {report.first_closure}, repeats {report.repeats}"
            f" -> {verdict}{detail}"
        )
    _emit(args.format, rows, human)
    return EXIT_OK if all_passed else EXIT_VERIFY_FAILED


def _cmd_fagnano(args: argparse.Namespace) -> int:
    path = simulate_fagnano(args.k)
    row = {
        "k": args.k,
        "period": 6 * args.k - 3,
        "bounces": path.bounce_count,
        "fundamental": fundamental_period(path),
        "closed": path.closed,
        "labels": "".join(str(s) for s in bounce_labels(path)),
    }
    human = [
        f"odd orbit k={args.k}: period {row['period']}, closed after "
        f"{row['bounces']} bounces, fundamental period {row['fundamental']},"
        f" all incidence angles 60 degrees"
    ]
    _emit(args.format, [row], human)
    return EXIT_OK


def _cmd_render(args: argparse.Namespace) -> int:
    c = OrbitClass(args.x, args.y).validate()
    if args.unfolded:
        doc = render_unfolded(c)
    else:
        path = trace_class(c)
        doc = render_folded(path, TriangleConfig(default_offset(c)))
    try:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(doc.to_xml())
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tribilliards",
        description="Periodic billiard orbits on an equilateral triangle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format", choices=("human", "json", "csv"), default="human",
            help="output format (default: human)",
        )

    p_count = sub.add_parser("count", help="count orbit classes of period 2n")
    p_count.add_argument("n", type=_positive_int)
    p_count.add_argument("--primitive", action="store_true",
                         help="count only primitive classes")
    add_format(p_count)
    p_count.set_defaults(func=_cmd_count)

    p_table = sub.add_parser("table", help="class/primitive counts for n = 1..max")
    p_table.add_argument("--max", type=_positive_int, required=True)
    add_format(p_table)
    p_table.set_defaults(func=_cmd_table)

    p_enum = sub.add_parser("enumerate", help="list orbit classes of period 2n")
    p_enum.add_argument("n", type=_positive_int)
    add_format(p_enum)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_verify = sub.add_parser(
        "verify", help="simulate and check classes: one (x y) or all of period 2n"
    )
    p_verify.add_argument("spec", type=int, nargs="+", metavar="N",
                          help="either n, or x y")
    p_verify.add_argument("--b", type=_fraction_arg, default=None,
                          help="launch-point offset as p/q (default: per-class safe offset)")
    add_format(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_fag = sub.add_parser("fagnano", help="simulate the k-th odd-period orbit")
    p_fag.add_argument("k", type=_positive_int)
    add_format(p_fag)
    p_fag.set_defaults(func=_cmd_fagnano)

    p_render = sub.add_parser("render", help="write an SVG figure for a class")
    p_render.add_argument("x", type=int)
    p_render.add_argument("y", type=int)
    p_render.add_argument("--unfolded", action="store_true",
                          help="draw the unfolded segment instead of the bounce path")
    p_render.add_argument("--out", required=True, help="output SVG file")
    p_render.set_defaults(func=_cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except VertexHit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERTEX
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
