"""Command-line interface.

Exit codes: 0 success (or a positive decision), 2 a negative domain answer
(not Delzant, not perfectly packable, chop too deep, wrong dimension to
render), 1 malformed or degenerate input.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog, io
from .delzant import blow_up, check_delzant, classify
from .errors import (
    BallTooLarge,
    ChopTooDeep,
    NotDelzant,
    NotDelzantResult,
    RenderDimension,
    ToricPackError,
)
from .lattice import format_rational, to_rational
from .packing import OmegaConfig, decide_perfect_packing, omega
from .render import render_svg

DOMAIN_NEGATIVE = (NotDelzant, ChopTooDeep, NotDelzantResult, BallTooLarge, RenderDimension)


def _read(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise io.InputError(f"cannot read {path}: {exc}") from exc
    return io.polytope_from_json(text)


def _emit(doc) -> None:
    sys.stdout.write(io.dumps(doc) + "\n")


def cmd_check(args) -> int:
    report = check_delzant(_read(args.file))
    _emit(io.delzant_report_to_json(report))
    return 0 if report.is_delzant else 2


def cmd_classify(args) -> int:
    _emit(io.classification_to_json(classify(_read(args.file), args.strict_sl)))
    return 0


def cmd_omega(args) -> int:
    _emit(io.packing_report_to_json(omega(_read(args.file), OmegaConfig(budget=args.budget))))
    return 0


def cmd_pack(args) -> int:
    decision = decide_perfect_packing(_read(args.file), OmegaConfig(budget=args.budget), args.strict_sl)
    _emit(io.decision_to_json(decision, args.enumerate))
    return 0 if decision.perfect else 2


def cmd_blowup(args) -> int:
    p = _read(args.file)
    out = blow_up(p, args.vertex, to_rational(args.size))
    delta = out.volume() - p.volume()
    _emit(io.polytope_to_json(out, volume_delta=format_rational(delta)))
    sys.stderr.write(f"volume delta: {format_rational(delta)}\n")
    return 0


def cmd_render(args) -> int:
    p = _read(args.file)
    witness = omega(p, OmegaConfig(budget=args.budget)).witness if args.pack and p.dim == 2 else None
    svg = render_svg(p, witness)
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


def cmd_catalog(args) -> int:
    if args.list or not args.name:
        for e in catalog.CATALOG.values():
            params = " ".join(f"[{p.name}={p.default}]" for p in e.params)
            flag = "  (negative fixture)" if e.negative else ""
            sys.stdout.write(f"{e.name} {params}: {e.description}{flag}\n")
        return 0
    entry, values = catalog.resolve(args.name, *args.params)
    p = entry.build(*values)
    extra = {"name": entry.name, "params": {q.name: str(v) for q, v in zip(entry.params, values)}}
    if entry.negative:
        extra["negative_fixture"] = True
    _emit(io.polytope_to_json(p, **extra))
    return 0


def _globals(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--strict-sl", action="store_true", default=d(False),
                        help="only orientation-preserving lattice maps in equivalences")
    parser.add_argument("--json", action="store_true", default=d(True), help="JSON output (the default)")
    parser.add_argument("--budget", type=int, default=d(64), help="branch-and-bound node budget for omega")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toricpack", description="Equivariant ball packings of Delzant polytopes")
    _globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        _globals(p, suppress=True)
        p.set_defaults(func=func)
        return p

    add("check", cmd_check, "verify the Delzant condition").add_argument("file")
    add("classify", cmd_classify, "identify CP^n / CP^1 x CP^1 models").add_argument("file")
    add("omega", cmd_omega, "certified packing density").add_argument("file")
    p = add("pack", cmd_pack, "decide perfect packability")
    p.add_argument("file")
    p.add_argument("--enumerate", action="store_true", help="list the perfect packings")
    p = add("blowup", cmd_blowup, "equivariant blow-up (corner chop)")
    p.add_argument("file")
    p.add_argument("--vertex", type=int, required=True, help="vertex index in canonical order")
    p.add_argument("--size", required=True, help="chop depth t as p/q")
    p = add("render", cmd_render, "SVG picture of a planar polytope")
    p.add_argument("file")
    p.add_argument("--pack", action="store_true", help="shade the optimal packing")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p = add("catalog", cmd_catalog, "emit a built-in polytope")
    p.add_argument("name", nargs="?")
    p.add_argument("params", nargs="*")
    p.add_argument("--list", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DOMAIN_NEGATIVE as exc:
        sys.stderr.write(f"{exc.code}: {exc}\n")
        return 2
    except ToricPackError as exc:
        sys.stderr.write(f"{exc.code}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
