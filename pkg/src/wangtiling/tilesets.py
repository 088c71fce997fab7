"""The fixed tile sets W23 and W29 and the rectangle set derived from W29.

Generalized tiles are transcribed as data tables: for each cell (relative
``(col, row)``, rows downward) the colors of its external sides.  Internal
cuts receive fresh glue colors ``glue:<group>:<k>`` where ``k`` indexes the
internal edges row-major.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .core import (
    Color,
    Edge,
    GLUE_PREFIX,
    GeneralizedTile,
    TileSet,
    WangTile,
    interior_edges,
    neighbor,
)
from .errors import OverrideOnExternalEdge, ParallelSidesEqual

# Color names.  "0p" is the clause-only color 0'.
V, ZERO, ONE, ZERO_P, B, L, R = "v", "0", "1", "0p", "b", "l", "r"

_CellSpec = Mapping[tuple[int, int], Mapping[str, Color]]


def _sig(i: int) -> Color:
    return str(i)


def _w23_groups() -> dict[str, _CellSpec]:
    g: dict[str, _CellSpec] = {
        "V0": {
            (0, 0): {"N": B, "W": V, "E": ZERO},
            (0, 1): {"W": V, "E": ZERO},
            (0, 2): {"S": B, "W": V, "E": ZERO},
        },
        "V1": {(0, 0): {"N": B, "S": B, "W": V, "E": ONE}},
        "C0": {(0, 0): {"N": B, "S": B, "W": ZERO, "E": ZERO_P}},
        "C1": {
            (0, 0): {"N": B, "W": ONE, "E": ZERO_P},
            (0, 1): {"S": B, "W": ZERO, "E": ONE},
        },
    }
    for i in (0, 1):
        s = _sig(i)
        g[f"F{i}"] = {(0, 0): {"N": B, "S": B, "W": s, "E": s}}
    for i in (0, 1):
        s = _sig(i)
        g[f"L{i}"] = {(0, 0): {"N": L, "S": L, "W": s, "E": s}}
    for i in (0, 1):
        s = _sig(i)
        g[f"R{i}"] = {
            (0, 0): {"N": B, "S": R, "W": s},
            (1, 0): {"N": R, "S": B, "E": s},
        }
    # X_ij: west (top j, bottom i) -> east (top i, bottom j)
    for i in (0, 1):
        for j in (0, 1):
            g[f"X{i}{j}"] = {
                (0, 0): {"N": R, "W": _sig(j), "E": _sig(i)},
                (0, 1): {"S": L, "W": _sig(i), "E": _sig(j)},
            }
    return g


def _w29_groups() -> dict[str, _CellSpec]:
    g: dict[str, _CellSpec] = {
        "V0": {
            (0, 0): {"N": L, "W": V, "E": ZERO},
            (0, 1): {"W": V, "E": ZERO},
            (0, 2): {"S": B, "W": V, "E": ZERO},
        },
        "V1x": {(0, 0): {"N": L, "S": B, "W": V, "E": ONE}},
        "V1y": {(0, 0): {"N": B, "S": L, "W": V, "E": ONE}},
        "C0": {(0, 0): {"N": B, "S": L, "W": ZERO, "E": ZERO_P}},
        "C1": {
            (0, 0): {"N": B, "W": ONE, "E": ZERO_P},
            (0, 1): {"S": B, "W": ZERO},
            (1, 1): {"N": L, "S": B, "E": ONE},
        },
    }
    for i in (0, 1):
        g[f"F{i}"] = {(0, 0): {"N": L, "S": B, "W": _sig(i), "E": _sig(1 - i)}}
    for i in (0, 1):
        g[f"L{i}"] = {(0, 0): {"N": B, "S": L, "W": _sig(i), "E": _sig(1 - i)}}
    for i in (0, 1):
        s = _sig(i)
        g[f"R{i}"] = {
            (0, 0): {"N": B, "S": R, "W": s},
            (1, 0): {"N": R, "S": B, "E": s},
        }
    for i in (0, 1):
        g[f"X{i}{i}"] = {
            (0, 0): {"N": R, "W": _sig(i), "E": _sig(1 - i)},
            (0, 1): {"S": B, "W": _sig(i), "E": _sig(1 - i)},
        }
    for i in (0, 1):
        g[f"X{i}{1 - i}"] = {
            (0, 0): {"N": R, "W": _sig(i)},
            (1, 0): {"N": B, "E": _sig(1 - i)},
            (0, 1): {"S": B, "W": _sig(1 - i)},
            (1, 1): {"S": B, "E": _sig(i)},
        }
    return g


# Group order fixes tile ids: variables, clauses, forwarders, anchors, crossovers.
W23_ORDER = (
    "V0", "V1", "C0", "C1", "F0", "F1", "L0", "L1", "R0", "R1",
    "X00", "X01", "X10", "X11",
)
W29_ORDER = (
    "V0", "V1x", "V1y", "C0", "C1", "F0", "F1", "L0", "L1", "R0", "R1",
    "X00", "X11", "X01", "X10",
)


def generalized_tile(name: str, spec: _CellSpec) -> GeneralizedTile:
    edge_colors = {
        ((c, r), side): color
        for (c, r), sides in spec.items()
        for side, color in sides.items()
    }
    return GeneralizedTile(name, frozenset(spec), edge_colors)


def glue_color(group: str, k: int) -> Color:
    return f"{GLUE_PREFIX}{group}:{k}"


def break_generalized(
    g: GeneralizedTile,
    glue_overrides: Mapping[Edge, Color] | None = None,
    first_id: int = 0,
) -> list[WangTile]:
    """Cut ``g`` into unit Wang tiles, one per cell.

    Internal edges are keyed canonically on the cell owning them as its N or W
    side.  Each gets a fresh glue color unless ``glue_overrides`` names it.
    Tiles come out in row-major cell order with consecutive ids.
    """
    glue_overrides = dict(glue_overrides or {})
    internal = interior_edges(g.cells)
    bad = set(glue_overrides) - set(internal)
    if bad:
        raise OverrideOnExternalEdge(f"{g.name}: not internal edges {sorted(bad)}")

    colors: dict[Edge, Color] = dict(g.edge_colors)
    for k, (cell, side) in enumerate(internal):
        color = glue_overrides.get((cell, side), glue_color(g.name, k))
        other = neighbor(cell, side)
        colors[(cell, side)] = color
        colors[(other, "S" if side == "N" else "E")] = color

    tiles = []
    for n, cell in enumerate(sorted(g.cells, key=lambda c: (c[1], c[0]))):
        tiles.append(
            WangTile(
                id=first_id + n,
                north=colors[(cell, "N")],
                south=colors[(cell, "S")],
                west=colors[(cell, "W")],
                east=colors[(cell, "E")],
                group=g.name,
                offset=cell,
            )
        )
    return tiles


def _assemble(name: str, groups: dict[str, _CellSpec], order: Iterable[str],
              overrides: Mapping[str, Mapping[Edge, Color]] | None = None) -> TileSet:
    overrides = overrides or {}
    tiles: list[WangTile] = []
    for gname in order:
        g = generalized_tile(gname, groups[gname])
        tiles.extend(break_generalized(g, overrides.get(gname), first_id=len(tiles)))
    return TileSet(name, tuple(tiles))


def w23_generalized() -> list[GeneralizedTile]:
    groups = _w23_groups()
    return [generalized_tile(n, groups[n]) for n in W23_ORDER]


def w29_generalized() -> list[GeneralizedTile]:
    groups = _w29_groups()
    return [generalized_tile(n, groups[n]) for n in W29_ORDER]


# The cut between the two right-hand cells of X_{i,1-i} reuses l.
W29_GLUE_OVERRIDES = {
    "X01": {((1, 1), "N"): L},
    "X10": {((1, 1), "N"): L},
}


def build_w23() -> TileSet:
    return _assemble("W23", _w23_groups(), W23_ORDER)


def build_w29() -> TileSet:
    return _assemble("W29", _w29_groups(), W29_ORDER, W29_GLUE_OVERRIDES)


def builtin_tileset(name: str) -> TileSet:
    key = name.lower()
    if key == "w23":
        return build_w23()
    if key == "w29":
        return build_w29()
    raise KeyError(f"unknown built-in tile set {name!r}")


# ---------------------------------------------------------------------------
# Rectangles

FAMILIES = ("f", "h", "v", "w", "s1", "s2", "s3", "s4")
PER_TILE_FAMILIES = ("w", "s1", "s2", "s3", "s4")

ROLE_COLUMNS = (
    "left anchors", "forwarders", "right anchors", "variables", "crossovers", "clauses",
)
_ROLE_PREFIX = {"L": "left anchors", "F": "forwarders", "R": "right anchors",
                "V": "variables", "X": "crossovers", "C": "clauses"}


def tile_role(tile: WangTile) -> str:
    return _ROLE_PREFIX.get(tile.group[:1], "other")


@dataclass(frozen=True)
class RectangleSpec:
    width: int
    height: int
    family: str
    source_tile: int | None = None

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise ValueError(f"non-positive rectangle {self.width}x{self.height}")
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if (self.family in ("f", "h", "v")) != (self.source_tile is None):
            raise ValueError("families f, h, v have no source tile; the others need one")

    @property
    def size(self) -> tuple[int, int]:
        return (self.width, self.height)


@dataclass(frozen=True)
class RectangleSet:
    name: str
    specs: tuple[RectangleSpec, ...]
    unit: int  # M
    labels: Mapping[Color, int] = field(hash=False)

    @property
    def sizes(self) -> dict[tuple[int, int], list[RectangleSpec]]:
        """Distinct sizes, in order of first emission, with their provenance."""
        out: dict[tuple[int, int], list[RectangleSpec]] = {}
        for spec in self.specs:
            out.setdefault(spec.size, []).append(spec)
        return out

    def __len__(self) -> int:
        return len(self.sizes)


def relabel_colors(t: TileSet) -> dict[Color, int]:
    """Colors numbered 1..n by first appearance (tiles by id, sides N, S, W, E)."""
    labels: dict[Color, int] = {}
    for tile in sorted(t.tiles, key=lambda x: x.id):
        for color in tile.colors:
            if color not in labels:
                labels[color] = len(labels) + 1
    return labels


def tile_rectangles(tile: WangTile, labels: Mapping[Color, int], m: int) -> list[RectangleSpec]:
    n, s, w, e = (5 ** labels[c] for c in tile.colors)
    return [
        RectangleSpec(14 * m + e - w, 31 * m + s - n, "w", tile.id),
        RectangleSpec(10 * m + w, 10 * m - n, "s1", tile.id),
        RectangleSpec(10 * m - e, 10 * m - n, "s2", tile.id),
        RectangleSpec(10 * m + w, 10 * m + s, "s3", tile.id),
        RectangleSpec(10 * m - e, 10 * m + s, "s4", tile.id),
    ]


def build_rectangles(t: TileSet) -> RectangleSet:
    for tile in t.tiles:
        if tile.north == tile.south or tile.west == tile.east:
            raise ParallelSidesEqual(
                f"tile {tile.id} ({tile.group}) repeats a color on parallel sides"
            )
    labels = relabel_colors(t)
    m = 100 * 5 ** len(labels)
    specs = [
        RectangleSpec(11 * m, 34 * m, "f"),
        RectangleSpec(31 * m, 11 * m, "h"),
        RectangleSpec(34 * m, 14 * m, "v"),
    ]
    for tile in sorted(t.tiles, key=lambda x: x.id):
        specs.extend(tile_rectangles(tile, labels, m))
    return RectangleSet(f"rect({t.name})", tuple(specs), m, labels)


def count_table(r: RectangleSet, t: TileSet) -> dict[str, dict[str, int]]:
    """Distinct rectangle counts by family and introducing tile role.

    Roles are visited in the column order of ``ROLE_COLUMNS`` (then any
    "other" tiles); a size is credited to the first role whose tiles emit it.
    The fixed rectangles f, h, v are reported under the ``"fixed"`` column.
    """
    by_tile: dict[int, list[RectangleSpec]] = {}
    seen: set[tuple[int, int]] = set()
    table: dict[str, dict[str, int]] = {
        fam: {role: 0 for role in ROLE_COLUMNS} for fam in PER_TILE_FAMILIES
    }
    fixed = 0
    for spec in r.specs:
        if spec.source_tile is None:
            if spec.size not in seen:
                seen.add(spec.size)
                fixed += 1
        else:
            by_tile.setdefault(spec.source_tile, []).append(spec)

    roles = list(ROLE_COLUMNS) + ["other"]
    tiles_by_role: dict[str, list[WangTile]] = {role: [] for role in roles}
    for tile in sorted(t.tiles, key=lambda x: x.id):
        tiles_by_role[tile_role(tile)].append(tile)
    for role in roles:
        for tile in tiles_by_role[role]:
            for spec in by_tile.get(tile.id, []):
                if spec.size in seen:
                    continue
                seen.add(spec.size)
                table[spec.family].setdefault(role, 0)
                table[spec.family][role] += 1
    totals = {role: sum(table[fam].get(role, 0) for fam in PER_TILE_FAMILIES) for role in roles}
    table["total"] = {role: n for role, n in totals.items() if role != "other" or n}
    table["fixed"] = {"f/h/v": fixed}
    return table
