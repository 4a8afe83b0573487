"""Command-line front end.

Exit codes: 0 ok, 1 usage/input error, 2 collision type (classify only),
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .classify import LevelSlope, enumerate_labels, enumerate_p0, level_slope_of, type_of
from .errors import CollisionType, LissbraidError
from .lissajous import is_collision_free, normalize
from .report import Report, build_report, collision_report_dict
from .shapetrace import csv_shape, svg_halfplane, svg_shape
from .verify import SUITES


def _parse_type(text: str) -> tuple[int, int]:
    try:
        m_str, n_str = text.split(",")
        return int(m_str), int(n_str)
    except ValueError as err:
        raise LissbraidError(f"--type wants 'm,n' with integers, got {text!r}") from err


def _parse_slope(text: str) -> tuple[int, int]:
    try:
        q_str, p_str = text.split("/")
        return int(p_str), int(q_str)
    except ValueError as err:
        raise LissbraidError(f"--slope wants 'q/p', got {text!r}") from err


def _emit_report(report: Report, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report.to_json_dict()))
    else:
        print(report.to_text())


def cmd_classify(args) -> int:
    m, n = _parse_type(args.type)
    nt = normalize(m, n)
    if not is_collision_free(m, n):
        print(json.dumps(collision_report_dict(m, n, nt)))
        return 2
    _emit_report(build_report(m, n), args.json)
    return 0


def cmd_from_label(args) -> int:
    p, q = _parse_slope(args.slope)
    try:
        label = LevelSlope(args.level, p, q)
    except LissbraidError:
        raise
    m, n = type_of(label)
    _emit_report(build_report(m, n), args.json)
    return 0


def cmd_cf(args) -> int:
    m, n = _parse_type(args.type)
    report = build_report(m, n)
    if args.json:
        print(json.dumps({"farEndpoint": str(report.far_endpoint), "cf": report.cf.to_json_dict()}))
    else:
        print(f"{report.far_endpoint}")
        print(f"cf: {report.cf}")
    return 0


def cmd_syzygy(args) -> int:
    m, n = _parse_type(args.type)
    report = build_report(m, n)
    seq = syzygy_sequence(*report.p0, periods=args.periods)
    if args.group:
        block = len(report.omega)
        seq = ".".join(seq[i:i + block] for i in range(0, len(seq), block))
    if args.json:
        print(json.dumps({"omega": report.omega, "syzygy": seq, "periods": args.periods}))
    else:
        print(f"omega:  {report.omega}")
        print(f"syzygy: {seq}")
    return 0


def cmd_plot(args) -> int:
    m, n = _parse_type(args.type)
    nt = normalize(m, n)
    if args.kind == "shape":
        if not is_collision_free(m, n):
            raise CollisionType(f"type {(m, n)} is not collision-free")
        if args.format == "csv":
            path = csv_shape(nt, args.ratio, args.steps, args.out)
        else:
            path = svg_shape(nt, args.ratio, args.steps, args.out)
    else:
        report = build_report(m, n)
        path = svg_halfplane(report.matrix, args.max_denominator, args.out)
    print(path)
    return 0


def cmd_enumerate(args) -> int:
    if args.max_m is not None:
        for m, n in enumerate_p0(args.max_m):
            label = level_slope_of(m, n)
            print(json.dumps({"m": m, "n": n, "level": label.level, "slope": label.slope_str}))
    elif args.max_sum is not None:
        for label in enumerate_labels(args.max_sum, args.max_level):
            m, n = type_of(label)
            print(json.dumps({"level": label.level, "slope": label.slope_str, "m": m, "n": n}))
    else:
        raise LissbraidError("enumerate wants --max-m or --max-sum")
    return 0


def cmd_verify(args) -> int:
    kwargs = {"seed": args.seed}
    if args.max_m is not None:
        kwargs["max_m"] = args.max_m
    if args.max_sum is not None:
        kwargs["max_sum"] = args.max_sum
    if args.max_level is not None:
        kwargs["max_level"] = args.max_level
    cases = SUITES[args.suite](**kwargs)
    failures = 0
    for name, ok, detail in cases:
        print(f"{'PASS' if ok else 'FAIL'} {name}  {detail}")
        failures += 0 if ok else 1
    print(f"{len(cases) - failures}/{len(cases)} cases pass")
    return 3 if failures else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lissbraid")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_type(p):
        p.add_argument("--type", required=True, help="frequencies 'm,n' (negatives allowed)")

    def add_json(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("classify", help="full report for a type")
    add_type(p); add_json(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("from-label", help="full report from a level/slope label")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--slope", required=True, help="slope 'q/p'")
    add_json(p)
    p.set_defaults(func=cmd_from_label)

    p = sub.add_parser("cf", help="far endpoint and its continued fraction")
    add_type(p); add_json(p)
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("syzygy", help="syzygy sequence of the class representative")
    add_type(p); add_json(p)
    p.add_argument("--periods", type=int, default=1)
    p.add_argument("--group", action="store_true", help="dot separators every |omega| letters")
    p.set_defaults(func=cmd_syzygy)

    p = sub.add_parser("plot", help="emit an SVG or CSV figure")
    add_type(p)
    p.add_argument("--kind", choices=("shape", "halfplane"), default="shape")
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("svg", "csv"), default="svg")
    p.add_argument("--ratio", type=float, default=0.05)
    p.add_argument("--steps", type=int, default=6000)
    p.add_argument("--max-denominator", type=int, default=8)
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("enumerate", help="stream types or labels as JSON lines")
    p.add_argument("--max-m", type=int)
    p.add_argument("--max-sum", type=int)
    p.add_argument("--max-level", type=int, default=10)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run a cross-validation suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--max-m", type=int)
    p.add_argument("--max-sum", type=int)
    p.add_argument("--max-level", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    return parser


_TYPE_VALUE = re.compile(r"^-?\d+,-?\d+$")


def _glue_type_values(argv: list[str]) -> list[str]:
    """Join '--type -5,7' into '--type=-5,7' so argparse does not read the
    leading minus as an option prefix."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok == "--type" and i + 1 < len(argv) and _TYPE_VALUE.match(argv[i + 1]):
            out.append(f"--type={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _glue_type_values(list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; remap to 1, keep 0 for --help
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except LissbraidError as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
