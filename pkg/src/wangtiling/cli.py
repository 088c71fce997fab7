"""Command-line entry point.

Exit codes: 0 yes / tileable / agree, 1 no / untileable / disagree,
2 usage or format error, 3 aborted by a search limit.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import formats
from .errors import TilingError, TooManyTiles
from .core import TileSet, validate_tiling
from .polytime import poly_solve
from .reduction import VARIANTS, build_region, parse_instance
from .render import RenderOptions, render
from .satcheck import DEFAULT_NODE_LIMIT, enumerate_instances, random_instances, run_harness
from .solver import ABORTED, TILEABLE, solve
from .tilesets import build_rectangles, build_w29, builtin_tileset, count_table, ROLE_COLUMNS

EXIT_YES, EXIT_NO, EXIT_USAGE, EXIT_ABORTED = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def load_tiles(spec: str) -> TileSet:
    """A built-in set name (``w23``, ``w29``) or a TileSet JSON file."""
    if spec.lower() in VARIANTS and not os.path.exists(spec):
        return builtin_tileset(spec)
    return formats.tileset_from_json(_read(spec))


def _cmd_tileset(args: argparse.Namespace) -> int:
    if args.variant == "rect":
        rects = build_rectangles(build_w29())
        if args.table:
            table = count_table(rects, build_w29())
            lines = ["family " + " | ".join(ROLE_COLUMNS) + " | total"]
            for fam in ("w", "s1", "s2", "s3", "s4"):
                row = table[fam]
                lines.append(f"{fam:<6} " + " ".join(f"{row[r]:>3}" for r in ROLE_COLUMNS)
                             + f" {sum(row[r] for r in ROLE_COLUMNS):>4}")
            totals = table["total"]
            lines.append("total  " + " ".join(f"{totals[r]:>3}" for r in ROLE_COLUMNS))
            lines.append(f"fixed  {sum(table['fixed'].values())}; distinct sizes {len(rects)}")
            _write(args.output, "\n".join(lines) + "\n")
        else:
            _write(args.output, formats.rectangles_to_json(rects))
        return EXIT_YES
    _write(args.output, formats.tileset_to_json(builtin_tileset(args.variant)))
    return EXIT_YES


def _cmd_reduce(args: argparse.Namespace) -> int:
    inst = parse_instance(_read(args.input))
    swaps = None
    if args.swaps:
        swaps = [int(x) for x in args.swaps.replace(",", " ").split()]
    region, plan = build_region(inst, args.variant, swaps)
    _write(args.output, formats.region_to_json(region))
    if args.plan:
        _write(args.plan, formats.plan_to_json(plan))
    return EXIT_YES


def _report(out, tiles: TileSet, region, args: argparse.Namespace) -> int:
    print(f"status: {out.status}")
    print(f"cells: {len(region)}")
    print(f"nodes: {out.stats.nodes}")
    print(f"max_depth: {out.stats.max_depth}")
    if getattr(args, "timing", False):
        print(f"seconds: {out.stats.wall_time:.3f}")
    if out.status == ABORTED:
        print(f"limit: {out.limit}")
        return EXIT_ABORTED
    if out.status == TILEABLE:
        assert not validate_tiling(region, tiles, out.tiling)
        if args.output:
            _write(args.output, formats.tiling_to_json(out.tiling))
        return EXIT_YES
    return EXIT_NO


def _cmd_solve(args: argparse.Namespace) -> int:
    tiles = load_tiles(args.tiles)
    region = formats.region_from_json(_read(args.region))
    out = solve(region, tiles, node_limit=args.node_limit, time_limit=args.time_limit)
    return _report(out, tiles, region, args)


def _cmd_polysolve(args: argparse.Namespace) -> int:
    tiles = load_tiles(args.tiles)
    region = formats.region_from_json(_read(args.region))
    try:
        out = poly_solve(tiles, region)
    except TooManyTiles as exc:
        print(f"polysolve: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return _report(out, tiles, region, args)


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.exhaustive is not None:
        instances = [i for n in range(1, args.exhaustive + 1) for i in enumerate_instances(n)]
    else:
        instances = random_instances(args.random, args.n, args.seed)
    variants = args.variant or list(VARIANTS)
    fh = open(args.report, "w", encoding="utf-8") if args.report else None
    try:
        summary = run_harness(instances, variants, args.node_limit, fh)
    finally:
        if fh:
            fh.close()
    print(summary.line())
    for text in summary.failures:
        print("disagreement on:\n" + text, file=sys.stderr)
    if summary.disagree:
        return EXIT_NO
    if summary.aborted:
        print(f"warning: {summary.aborted} instances hit the node limit", file=sys.stderr)
        return EXIT_ABORTED
    return EXIT_YES


def _cmd_render(args: argparse.Namespace) -> int:
    region = formats.region_from_json(_read(args.region))
    tiling = formats.tiling_from_json(_read(args.tiling)) if args.tiling else None
    tiles = load_tiles(args.tiles) if args.tiles else None
    show = frozenset(args.show.split(",")) if args.show else None
    opts = RenderOptions(format=args.format, scale=args.scale,
                         **({"show": show} if show else {}))
    _write(args.output, render(region, tiles, tiling, opts))
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wangtiling", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("tileset", help="emit a built-in tile set or the rectangle set")
    sp.add_argument("--variant", choices=["w23", "w29", "rect"], required=True)
    sp.add_argument("--table", action="store_true",
                    help="with rect: print distinct-size counts by family and role")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=_cmd_tileset)

    sp = sub.add_parser("reduce", help="compile a cm13 formula into a region")
    sp.add_argument("--variant", choices=VARIANTS, default="w23")
    sp.add_argument("-i", "--input", required=True, help="formula file ('-' for stdin)")
    sp.add_argument("-o", "--output", help="region JSON (default stdout)")
    sp.add_argument("--plan", help="also write the layout plan JSON here")
    sp.add_argument("--swaps", help="explicit swap sequence, e.g. '8,7,6'")
    sp.set_defaults(func=_cmd_reduce)

    for name, func, text in (("solve", _cmd_solve, "exact search"),
                             ("polysolve", _cmd_polysolve, "polynomial time, at most 3 tiles")):
        sp = sub.add_parser(name, help=f"decide tileability ({text})")
        sp.add_argument("-t", "--tiles", required=True, help="w23, w29 or a TileSet JSON file")
        sp.add_argument("-r", "--region", required=True, help="region JSON file")
        sp.add_argument("-o", "--output", help="write the tiling JSON here")
        sp.add_argument("--timing", action="store_true", help="also print wall time")
        if name == "solve":
            sp.add_argument("--node-limit", type=int, default=None)
            sp.add_argument("--time-limit", type=float, default=None, help="seconds")
        sp.set_defaults(func=func)

    sp = sub.add_parser("verify", help="check satisfiable <=> tileable on many instances")
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", type=int, metavar="N",
                      help="all canonical instances with 1..N variables (N <= 4)")
    mode.add_argument("--random", type=int, metavar="COUNT", help="number of random instances")
    sp.add_argument("--n", type=int, nargs="+", default=[4, 5, 6],
                    help="variable counts cycled through by --random")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--variant", choices=VARIANTS, action="append")
    sp.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    sp.add_argument("--report", help="JSON lines output, one report per instance")
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("render", help="draw a region, optionally with a tiling")
    sp.add_argument("-r", "--region", required=True)
    sp.add_argument("--tiling")
    sp.add_argument("-t", "--tiles", help="needed with --tiling")
    sp.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    sp.add_argument("--show", help="comma list of region,tiling,colors (default all)")
    sp.add_argument("--scale", type=int, default=24)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=_cmd_render)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (TilingError, OSError, ValueError, KeyError) as exc:
        print(f"wangtiling {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
