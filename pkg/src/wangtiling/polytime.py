"""Polynomial-time tiling for sets of at most three Wang tiles.

With three or fewer distinct tiles, one of three things holds: some side
alone tells the tiles apart, some pair of neighboring sides does, or two
opposite sides are each a single color.  The first two cases are tiled by
forced placement sweeping away from that side or corner; the last splits the
region into independent bars.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable

from .core import OPPOSITE, SIDES, Cell, Color, Region, TileSet, Tiling, WangTile, neighbor
from .errors import NotBarCase, NotCornerDistinguishable, NotDistinguishable, TooManyTiles
from .solver import TILEABLE, UNTILEABLE, SolveOutcome, SolveStats

# Neighboring side pairs, clockwise from the upper-right corner.
CORNERS = (("N", "E"), ("E", "S"), ("S", "W"), ("W", "N"))
ONE_SIDE_ORDER = ("N", "E", "S", "W")

# Sort key per side: cells whose neighbor across that side comes first.
_SWEEP = {
    "N": lambda c: c[1],
    "S": lambda c: -c[1],
    "W": lambda c: c[0],
    "E": lambda c: -c[0],
}


def dedupe(tiles: Iterable[WangTile]) -> list[WangTile]:
    """Drop tiles whose four colors repeat an earlier tile."""
    seen: set[tuple[Color, ...]] = set()
    out = []
    for t in tiles:
        if t.colors not in seen:
            seen.add(t.colors)
            out.append(t)
    return out


def side_colors(tiles: Iterable[WangTile]) -> dict[str, frozenset[Color]]:
    ts = list(tiles)
    return {s: frozenset(t.side(s) for t in ts) for s in SIDES}


def color_deficiency(tiles: Iterable[WangTile]) -> int:
    ts = list(tiles)
    if not ts:
        raise ValueError("color deficiency of an empty tile set")
    return len(ts) - max(len(c) for c in side_colors(ts).values())


@dataclass(frozen=True)
class SideProfile:
    colors: dict[str, frozenset[Color]]
    kind: str  # "one_side", "corner", "opposite_monochrome" or "other"
    sides: tuple[str, ...]

    def __hash__(self) -> int:
        return hash((self.kind, self.sides))


def classify(tiles: Iterable[WangTile]) -> SideProfile:
    ts = dedupe(tiles)
    if len(ts) > 3:
        raise TooManyTiles(f"{len(ts)} distinct tiles; only sets of at most 3 are handled")
    if not ts:
        raise ValueError("cannot classify an empty tile set")
    colors = side_colors(ts)
    for s in ONE_SIDE_ORDER:
        if len(colors[s]) == len(ts):
            return SideProfile(colors, "one_side", (s,))
    for a, b in CORNERS:
        if len({(t.side(a), t.side(b)) for t in ts}) == len(ts):
            return SideProfile(colors, "corner", (a, b))
    for a, b in (("N", "S"), ("W", "E")):
        if len(colors[a]) == 1 and len(colors[b]) == 1:
            return SideProfile(colors, "opposite_monochrome", (a, b))
    return SideProfile(colors, "other", ())


def _edge_color(region: Region, placed: dict[Cell, WangTile], cell: Cell, side: str
                ) -> Color | None:
    """Color the cell must show on ``side``: boundary or placed neighbor."""
    color = region.boundary.get((cell, side))
    if color is not None:
        return color
    other = placed.get(neighbor(cell, side))
    return None if other is None else other.side(OPPOSITE[side])


def _fits(region: Region, placed: dict[Cell, WangTile], cell: Cell, tile: WangTile) -> bool:
    for side in SIDES:
        want = _edge_color(region, placed, cell, side)
        if want is not None and want != tile.side(side):
            return False
    return True


def _forced_sweep(tiles: list[WangTile], region: Region, keys: tuple[str, ...]) -> SolveOutcome:
    start = time.monotonic()
    lookup = {tuple(t.side(s) for s in keys): t for t in tiles}
    order = sorted(region.cells,
                   key=lambda c: tuple(_SWEEP[s](c) for s in keys) + (c[1], -c[0]))
    placed: dict[Cell, WangTile] = {}
    stats = SolveStats()
    for cell in order:
        key = tuple(_edge_color(region, placed, cell, s) for s in keys)
        tile = lookup.get(key)  # type: ignore[arg-type]
        if tile is None or not _fits(region, placed, cell, tile):
            stats.wall_time = time.monotonic() - start
            return SolveOutcome(UNTILEABLE, None, stats)
        placed[cell] = tile
        stats.nodes += 1
    stats.max_depth = stats.nodes
    stats.wall_time = time.monotonic() - start
    return SolveOutcome(TILEABLE, Tiling({c: t.id for c, t in placed.items()}), stats)


def tile_from_side(tiles: Iterable[WangTile], region: Region, side: str = "N") -> SolveOutcome:
    """Place tiles forced by their ``side`` color, sweeping away from that side.

    A yes answer comes with the only tiling there is.
    """
    ts = dedupe(tiles)
    if len({t.side(side) for t in ts}) != len(ts):
        raise NotDistinguishable(f"tiles share {side} colors")
    return _forced_sweep(ts, region, (side,))


def tile_from_corner(tiles: Iterable[WangTile], region: Region,
                     corner: tuple[str, str] = ("N", "E")) -> SolveOutcome:
    """Place tiles forced by the color pair on two neighboring sides.

    For the default upper-right corner, cells go topmost first, then rightmost.
    """
    a, b = corner
    if (a, b) not in CORNERS:
        raise ValueError(f"{corner} is not a clockwise pair of neighboring sides")
    ts = dedupe(tiles)
    if len({(t.side(a), t.side(b)) for t in ts}) != len(ts):
        raise NotCornerDistinguishable(f"tiles share ({a}, {b}) color pairs")
    return _forced_sweep(ts, region, corner)


_TRANSPOSE_SIDE = {"N": "W", "W": "N", "S": "E", "E": "S"}


def _transpose_tile(t: WangTile) -> WangTile:
    return WangTile(t.id, north=t.west, south=t.east, west=t.north, east=t.south,
                    group=t.group, offset=(t.offset[1], t.offset[0]))


def _transpose_region(region: Region) -> Region:
    return Region(
        frozenset((r, c) for c, r in region.cells),
        {((r, c), _TRANSPOSE_SIDE[s]): col for ((c, r), s), col in region.boundary.items()},
    )


def _bar_dp(tiles: list[WangTile], west: Color, east: Color, length: int
            ) -> list[WangTile] | None:
    """Tiles for a horizontal bar of ``length`` cells with the given end colors."""
    # layers[k]: east color after k+1 tiles -> tile used there
    layers: list[dict[Color, WangTile]] = []
    frontier = {west}
    for _ in range(length):
        layer: dict[Color, WangTile] = {}
        for t in tiles:
            if t.west in frontier and t.east not in layer:
                layer[t.east] = t
        if not layer:
            return None
        layers.append(layer)
        frontier = set(layer)
    if east not in frontier:
        return None
    out = []
    color = east
    for layer in reversed(layers):
        t = layer[color]
        out.append(t)
        color = t.west
    out.reverse()
    return out


def tile_bars(tiles: Iterable[WangTile], region: Region, axis: str = "horizontal"
              ) -> SolveOutcome:
    """Tile a region when north and south (or west and east) are each one color.

    The region splits into maximal bars along ``axis``; each bar is decided by
    west-to-east reachability over the colors.
    """
    ts = dedupe(tiles)
    if axis == "vertical":
        out = tile_bars([_transpose_tile(t) for t in ts], _transpose_region(region))
        if out.tiling is not None:
            out.tiling = Tiling({(r, c): tid for (c, r), tid in out.tiling.placements.items()})
        return out
    if axis != "horizontal":
        raise ValueError(f"unknown axis {axis!r}")
    start = time.monotonic()
    norths = {t.north for t in ts}
    souths = {t.south for t in ts}
    if len(norths) != 1 or len(souths) != 1:
        raise NotBarCase("north and south sides must each be a single color")
    north, south = next(iter(norths)), next(iter(souths))
    stats = SolveStats()

    def fail() -> SolveOutcome:
        stats.wall_time = time.monotonic() - start
        return SolveOutcome(UNTILEABLE, None, stats)

    for cell in region.cells:
        n = region.boundary.get((cell, "N"))
        s = region.boundary.get((cell, "S"))
        if (n is None and north != south) or (n is not None and n != north):
            return fail()
        if s is not None and s != south:
            return fail()

    placements: dict[Cell, int] = {}
    for cell in sorted(region.cells, key=lambda c: (c[1], c[0])):
        if (cell, "W") not in region.boundary:
            continue
        c, r = cell
        end = c
        while (end, r) in region.cells and ((end, r), "E") not in region.boundary:
            end += 1
        bar = _bar_dp(ts, region.boundary[(cell, "W")], region.boundary[((end, r), "E")],
                      end - c + 1)
        stats.nodes += 1
        if bar is None:
            return fail()
        for k, t in enumerate(bar):
            placements[(c + k, r)] = t.id
    stats.wall_time = time.monotonic() - start
    return SolveOutcome(TILEABLE, Tiling(placements), stats)


def _single(tile: WangTile, region: Region) -> SolveOutcome:
    start = time.monotonic()
    cells = region.cells
    ok = all(tile.side(s) == col for (_, s), col in region.boundary.items())
    if tile.north != tile.south and any(neighbor(c, "S") in cells for c in cells):
        ok = False
    if tile.west != tile.east and any(neighbor(c, "E") in cells for c in cells):
        ok = False
    stats = SolveStats(nodes=len(cells), wall_time=time.monotonic() - start)
    if not ok:
        return SolveOutcome(UNTILEABLE, None, stats)
    return SolveOutcome(TILEABLE, Tiling({c: tile.id for c in cells}), stats)


def dispatch_branch(tiles: Iterable[WangTile]) -> str:
    """Which algorithm :func:`poly_solve` uses: single, side, corner or bars."""
    ts = dedupe(tiles)
    if len(ts) == 1:
        return "single"
    p = classify(ts)
    return {"one_side": "side", "corner": "corner",
            "opposite_monochrome": "bars"}.get(p.kind, "other")


def poly_solve(tiles: TileSet | Iterable[WangTile], region: Region) -> SolveOutcome:
    """Decide tileability for at most three distinct tiles in polynomial time."""
    ts = dedupe(tiles)
    if len(ts) > 3:
        raise TooManyTiles(
            f"{len(ts)} distinct tiles: the general-region problem for four or more "
            "tiles is open; use the exact solver instead"
        )
    if not ts:
        raise ValueError("empty tile set")
    if not region.cells:
        return SolveOutcome(TILEABLE, Tiling({}))
    if len(ts) == 1:
        return _single(ts[0], region)
    p = classify(ts)
    if p.kind == "one_side":
        return tile_from_side(ts, region, p.sides[0])
    if p.kind == "corner":
        return tile_from_corner(ts, region, p.sides)  # type: ignore[arg-type]
    if p.kind == "opposite_monochrome":
        return tile_bars(ts, region, "horizontal" if p.sides == ("N", "S") else "vertical")
    raise NotDistinguishable("tile set fits none of the polynomial-time cases")
