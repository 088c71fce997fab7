"""Colors, Wang tiles, colored-boundary regions and tilings.

Coordinates are ``(col, row)`` with columns growing rightward and rows growing
downward, so row 0 is the top of a region.  An edge is addressed as
``(cell, side)`` with ``side`` one of ``"N"``, ``"S"``, ``"E"``, ``"W"``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import (
    BoundaryExtraneous,
    BoundaryIncomplete,
    DisconnectedCells,
    UnknownTileId,
)

Color = str
Cell = tuple[int, int]
Edge = tuple[Cell, str]

SIDES = ("N", "S", "W", "E")
DELTA = {"N": (0, -1), "S": (0, 1), "W": (-1, 0), "E": (1, 0)}
OPPOSITE = {"N": "S", "S": "N", "W": "E", "E": "W"}

GLUE_PREFIX = "glue:"


def is_glue(color: Color) -> bool:
    return color.startswith(GLUE_PREFIX)


def neighbor(cell: Cell, side: str) -> Cell:
    dc, dr = DELTA[side]
    return (cell[0] + dc, cell[1] + dr)


def boundary_edges(cells: Iterable[Cell]) -> set[Edge]:
    """Edges of ``cells`` whose neighbor across the edge is not in ``cells``."""
    cells = set(cells)
    return {
        (cell, side)
        for cell in cells
        for side in SIDES
        if neighbor(cell, side) not in cells
    }


def interior_edges(cells: Iterable[Cell]) -> list[Edge]:
    """Interior edges, each listed once on the cell that owns it as N or W.

    Sorted row-major, with the N edge of a cell before its W edge.
    """
    cells = set(cells)
    edges = [
        (cell, side)
        for cell in cells
        for side in ("N", "W")
        if neighbor(cell, side) in cells
    ]
    return sorted(edges, key=lambda e: (e[0][1], e[0][0], e[1]))


def is_edge_connected(cells: Iterable[Cell]) -> bool:
    cells = set(cells)
    if not cells:
        return True
    start = next(iter(cells))
    seen = {start}
    queue = deque([start])
    while queue:
        cell = queue.popleft()
        for side in SIDES:
            nb = neighbor(cell, side)
            if nb in cells and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return len(seen) == len(cells)


@dataclass(frozen=True)
class WangTile:
    id: int
    north: Color
    south: Color
    west: Color
    east: Color
    group: str = ""
    offset: Cell = (0, 0)

    def side(self, side: str) -> Color:
        return {"N": self.north, "S": self.south, "W": self.west, "E": self.east}[side]

    @property
    def colors(self) -> tuple[Color, Color, Color, Color]:
        """The four side colors in N, S, W, E order."""
        return (self.north, self.south, self.west, self.east)


@dataclass(frozen=True)
class GeneralizedTile:
    """A polyomino whose boundary unit edges each carry a color."""

    name: str
    cells: frozenset[Cell]
    edge_colors: Mapping[Edge, Color] = field(hash=False)

    def __post_init__(self) -> None:
        if not self.cells or not is_edge_connected(self.cells):
            raise DisconnectedCells(f"generalized tile {self.name!r} is not a polyomino")
        expected = boundary_edges(self.cells)
        given = set(self.edge_colors)
        if expected - given:
            raise BoundaryIncomplete(
                f"{self.name}: uncolored edges {sorted(expected - given)}"
            )
        if given - expected:
            raise BoundaryExtraneous(
                f"{self.name}: colored non-boundary edges {sorted(given - expected)}"
            )


@dataclass(frozen=True)
class TileSet:
    name: str
    tiles: tuple[WangTile, ...]

    def __post_init__(self) -> None:
        ids = [t.id for t in self.tiles]
        if len(set(ids)) != len(ids):
            raise ValueError(f"tile set {self.name!r} has repeated tile ids")
        placements = [(t.group, t.offset) for t in self.tiles if t.group]
        if len(set(placements)) != len(placements):
            raise ValueError(f"tile set {self.name!r} has repeated (group, offset) pairs")
        sides = [t.colors for t in self.tiles]
        if len(set(sides)) != len(sides):
            raise ValueError(f"tile set {self.name!r} contains two identical tiles")

    @property
    def alphabet(self) -> frozenset[Color]:
        return frozenset(c for t in self.tiles for c in t.colors)

    def __len__(self) -> int:
        return len(self.tiles)

    def __iter__(self) -> Iterator[WangTile]:
        return iter(self.tiles)

    def by_id(self, tile_id: int) -> WangTile:
        for t in self.tiles:
            if t.id == tile_id:
                return t
        raise UnknownTileId(tile_id)

    def groups(self) -> dict[str, list[WangTile]]:
        out: dict[str, list[WangTile]] = {}
        for t in self.tiles:
            out.setdefault(t.group, []).append(t)
        return out

    def group_tile(self, group: str, offset: Cell) -> WangTile:
        for t in self.tiles:
            if t.group == group and t.offset == offset:
                return t
        raise KeyError((group, offset))


@dataclass(frozen=True)
class Region:
    """A finite set of cells with a color on every boundary unit edge.

    Build through :func:`make_region` to get the invariants checked.
    """

    cells: frozenset[Cell]
    boundary: Mapping[Edge, Color] = field(hash=False)

    @classmethod
    def empty(cls) -> "Region":
        return cls(frozenset(), {})

    def __len__(self) -> int:
        return len(self.cells)

    def color(self, cell: Cell, side: str) -> Color | None:
        return self.boundary.get((cell, side))

    def bbox(self) -> tuple[int, int, int, int]:
        """``(min_col, min_row, max_col, max_row)``."""
        cols = [c for c, _ in self.cells]
        rows = [r for _, r in self.cells]
        return min(cols), min(rows), max(cols), max(rows)

    def scanline(self) -> list[Cell]:
        return sorted(self.cells, key=lambda c: (c[1], c[0]))


@dataclass(frozen=True)
class Tiling:
    placements: Mapping[Cell, int] = field(hash=False)

    def __len__(self) -> int:
        return len(self.placements)


def make_region(cells: Iterable[Cell], boundary: Mapping[Edge, Color]) -> Region:
    cells = frozenset((int(c), int(r)) for c, r in cells)
    if not cells:
        raise DisconnectedCells("a region needs at least one cell")
    if not is_edge_connected(cells):
        raise DisconnectedCells("region cells are not edge-connected")
    expected = boundary_edges(cells)
    given = set(boundary)
    missing = expected - given
    if missing:
        raise BoundaryIncomplete(f"{len(missing)} uncolored boundary edges, e.g. {min(missing)}")
    extra = given - expected
    if extra:
        raise BoundaryExtraneous(f"{len(extra)} colored non-boundary edges, e.g. {min(extra)}")
    return Region(cells, dict(boundary))


def is_simply_connected(region: Region) -> bool:
    """True iff the region has no holes.

    Flood-fills the complement inside a frame one cell larger than the bounding
    box; any complement cell not reached from the frame lies in a hole.
    """
    if not region.cells:
        return True
    c0, r0, c1, r1 = region.bbox()
    c0, r0, c1, r1 = c0 - 1, r0 - 1, c1 + 1, r1 + 1
    cells = region.cells
    start = (c0, r0)
    seen = {start}
    queue = deque([start])
    while queue:
        cell = queue.popleft()
        for side in SIDES:
            nb = neighbor(cell, side)
            if nb in seen or nb in cells:
                continue
            if c0 <= nb[0] <= c1 and r0 <= nb[1] <= r1:
                seen.add(nb)
                queue.append(nb)
    frame_area = (c1 - c0 + 1) * (r1 - r0 + 1)
    return len(seen) + len(cells) == frame_area


@dataclass(frozen=True)
class Violation:
    kind: str  # "uncovered", "outside", "boundary", "interior"
    cell: Cell
    side: str | None = None
    expected: Color | None = None
    found: Color | None = None


def validate_tiling(region: Region, tiles: TileSet, tiling: Tiling) -> list[Violation]:
    """List every unmet constraint; an empty list means the tiling is valid."""
    lookup = {t.id: t for t in tiles}
    for tid in tiling.placements.values():
        if tid not in lookup:
            raise UnknownTileId(tid)
    report: list[Violation] = []
    placed = tiling.placements
    for cell in region.scanline():
        if cell not in placed:
            report.append(Violation("uncovered", cell))
    for cell in sorted(set(placed) - region.cells, key=lambda c: (c[1], c[0])):
        report.append(Violation("outside", cell))
    for cell in region.scanline():
        if cell not in placed:
            continue
        tile = lookup[placed[cell]]
        for side in SIDES:
            want = region.boundary.get((cell, side))
            if want is not None:
                if tile.side(side) != want:
                    report.append(Violation("boundary", cell, side, want, tile.side(side)))
            elif side in ("E", "S"):
                nb = neighbor(cell, side)
                if nb in placed:
                    other = lookup[placed[nb]].side(OPPOSITE[side])
                    if other != tile.side(side):
                        report.append(
                            Violation("interior", cell, side, other, tile.side(side))
                        )
    return report
