"""``hexpath`` command line.

Exit codes: 0 success, 1 mismatch, 2 usage or invalid input, 3 resource
bound exceeded, 4 network failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bijections, closed_forms, counters, crosscheck, geometry, oeis, riordan
from .errors import (
    BoundExceeded,
    DecompositionFailure,
    HexpathError,
    InvalidImagePath,
    NetworkError,
    NotAxisPath,
    NotInchworm,
    NotRiordan,
    OrderTooLarge,
    PathError,
    UnknownName,
)
from .render import render_svg
from .series import UPoly
from .steps import parse_path
from .tables import StatTable

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BOUND, EXIT_NETWORK = 0, 1, 2, 3, 4

_POLY_STATS = ("area", "kiss", "inchworm")


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _fail(code: int, msg: str) -> int:
    print(f"hexpath: {msg}", file=sys.stderr)
    return code


# ---- count ------------------------------------------------------------------------------

def cmd_count(args) -> int:
    if args.by in _POLY_STATS and args.stat != "width":
        return _fail(EXIT_USAGE, f"--by {args.by} is only defined for --stat width")
    if args.max < 0:
        return _fail(EXIT_USAGE, "--max must be nonnegative")
    if args.by == "height":
        if args.method == "brute":
            table = geometry.brute_stat_table((args.stat, "height"), args.max)
        elif args.stat == "width":
            table = counters.width_height_table(args.max)
        else:
            table = counters.steps_height_table(args.max)
    else:
        m = args.max - args.max % 4
        if args.method == "brute":
            polys = geometry.brute_axis_polys(args.by, m)
        else:
            polys = {"area": counters.area_polys, "kiss": counters.kiss_polys, "inchworm": counters.inchworm_polys}[args.by](m)
        t = polys.to_stat_table()
        table = StatTable(t.statistic, args.by, t.entries, t.bound)
    _emit(table.format(args.format, "u" if args.by == "height" else "y"))
    return EXIT_OK


# ---- series -------------------------------------------------------------------------------

def cmd_series(args) -> int:
    s = closed_forms.gf(args.name, args.order)
    if args.format == "json":
        _emit(json.dumps({"name": args.name, "order": args.order, "series": s.to_json()}))
    elif isinstance(s, UPoly):
        # second variable of the area and kissing series is y
        _emit(s.format("x", "y" if args.name[:2] in ("A_", "B_") else "u"))
    else:
        _emit(s.format())
    return EXIT_OK


# ---- crosscheck ---------------------------------------------------------------------------

def cmd_crosscheck(args) -> int:
    checks = crosscheck.run(args.suite, args.max_width, args.max_steps)
    ok = all(c.passed for c in checks)
    _emit(json.dumps({
        "suite": args.suite,
        "max_width": args.max_width,
        "max_steps": args.max_steps,
        "pass": ok,
        "checks": [c.to_json_obj() for c in checks],
    }, indent=1))
    if not ok:
        first = next(c for c in checks if not c.passed)
        return _fail(EXIT_MISMATCH, f"{first.suite}: {first.name}: {first.detail}")
    return EXIT_OK


# ---- biject -------------------------------------------------------------------------------

def cmd_biject(args) -> int:
    path = parse_path(args.tokens)
    img = bijections.MAPS[args.map](path)
    if isinstance(img, bijections.CircleSequence):
        _emit(" ".join(f"({c.x},{c.h})" for c in img))
    else:
        _emit(str(img))
    return EXIT_OK


# ---- riordan ------------------------------------------------------------------------------

def cmd_riordan(args) -> int:
    if args.source == "counts":
        m = riordan.build_from_counts(args.which, args.size)
    else:
        m = riordan.build_from_closed_pair(args.which, args.size)
    az = None
    if args.az:
        try:
            az = {"A": [str(v) for v in riordan.a_sequence(m)], "Z": [str(v) for v in riordan.z_sequence(m)]}
        except NotRiordan as e:
            return _fail(EXIT_MISMATCH, str(e))
    if args.format == "json":
        obj = m.to_json_obj()
        obj["which"] = args.which
        if az:
            obj.update(az)
        _emit(json.dumps(obj))
    elif args.format == "csv":
        _emit(m.to_csv())
        if az:
            _emit("A," + ",".join(az["A"]) + "\nZ," + ",".join(az["Z"]))
    else:
        for n in range(m.size):
            _emit(" ".join(str(v) for v in m.row(n)))
        if az:
            _emit("A = " + ", ".join(az["A"]) + "\nZ = " + ", ".join(az["Z"]))
    return EXIT_OK


# ---- render -------------------------------------------------------------------------------

def cmd_render(args) -> int:
    svg = render_svg(parse_path(args.tokens))
    if args.out in (None, "-"):
        sys.stdout.write(svg)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return EXIT_OK


# ---- oeis ---------------------------------------------------------------------------------

def cmd_oeis(args) -> int:
    rep = oeis.check(args.id, args.terms, args.online)
    obj = rep.to_json_obj()
    obj["computed"] = [str(v) for v in rep.computed]
    obj["reference"] = [str(v) for v in rep.reference]
    _emit(json.dumps(obj))
    if not rep.match:
        return _fail(EXIT_MISMATCH, f"{rep.id}: first mismatch at index {rep.mismatches[0][0] if rep.mismatches else '?'}")
    return EXIT_OK


# ---- parser -------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hexpath", description="Packing paths in the hexagonal circle packing.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="tabulate paths by size and a second statistic")
    c.add_argument("--stat", choices=("width", "steps"), default="width")
    c.add_argument("--by", choices=("height",) + _POLY_STATS, default="height")
    c.add_argument("--max", type=int, default=8)
    c.add_argument("--format", choices=("json", "csv", "text"), default="json")
    c.add_argument("--method", choices=("dp", "brute"), default="dp")
    c.set_defaults(func=cmd_count)

    s = sub.add_parser("series", help="expand a named generating function")
    s.add_argument("name", choices=closed_forms.CATALOG)
    s.add_argument("--order", type=int, default=12)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_series)

    x = sub.add_parser("crosscheck", help="run agreement suites")
    x.add_argument("--suite", choices=crosscheck.SUITES + ("all",), default="all")
    x.add_argument("--max-width", type=int, default=crosscheck.DEFAULT_MAX_WIDTH)
    x.add_argument("--max-steps", type=int, default=crosscheck.DEFAULT_MAX_STEPS)
    x.set_defaults(func=cmd_crosscheck)

    b = sub.add_parser("biject", help="apply a bijection to a path")
    b.add_argument("--map", choices=tuple(bijections.MAPS), required=True)
    b.add_argument("tokens", help='steps such as "U F D"')
    b.set_defaults(func=cmd_biject)

    r = sub.add_parser("riordan", help="print one of the Riordan arrays")
    r.add_argument("--which", choices=riordan.ARRAYS, default="Se2")
    r.add_argument("--size", type=int, default=8)
    r.add_argument("--source", choices=("counts", "pair"), default="counts")
    r.add_argument("--format", choices=("json", "csv", "text"), default="text")
    r.add_argument("--az", action="store_true", help="also print the A- and Z-sequences")
    r.set_defaults(func=cmd_riordan)

    d = sub.add_parser("render", help="draw a path as SVG")
    d.add_argument("tokens", help='steps such as "U F D" (empty string for the empty path)')
    d.add_argument("--out", default="-")
    d.set_defaults(func=cmd_render)

    o = sub.add_parser("oeis", help="compare computed terms with an OEIS sequence")
    o.add_argument("id")
    o.add_argument("--terms", type=int, default=None)
    o.add_argument("--online", action="store_true")
    o.set_defaults(func=cmd_oeis)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (BoundExceeded, OrderTooLarge) as e:
        return _fail(EXIT_BOUND, str(e))
    except NetworkError as e:
        return _fail(EXIT_NETWORK, str(e))
    except (PathError, NotAxisPath, NotInchworm, DecompositionFailure, InvalidImagePath, UnknownName, ValueError) as e:
        return _fail(EXIT_USAGE, str(e))
    except HexpathError as e:
        return _fail(EXIT_USAGE, str(e))


if __name__ == "__main__":
    sys.exit(main())
