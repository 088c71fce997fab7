"""Exact tiling search, direct construction from assignments, and extraction.

The search keeps a bitmask domain of candidate tiles per cell.  Boundary
colors prefilter the domains; after every placement, arc consistency is
restored across interior edges (a support table per direction maps a domain
to the tiles its neighbor may still use).  Branching follows scanline order
(topmost, then leftmost undetermined cell) with tiles tried in id order, so
results are deterministic.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from .core import OPPOSITE, SIDES, Cell, Color, Region, TileSet, Tiling, neighbor
from .errors import MalformedVariableColumn, NotOneInThree, SolverAborted
from .reduction import Cm13Instance, LayoutPlan, build_region
from .tilesets import B, L, builtin_tileset

TILEABLE, UNTILEABLE, ABORTED = "tileable", "untileable", "aborted"


@dataclass
class SolveStats:
    nodes: int = 0
    max_depth: int = 0
    wall_time: float = 0.0


@dataclass
class SolveOutcome:
    status: str
    tiling: Tiling | None = None
    stats: SolveStats = field(default_factory=SolveStats)
    limit: str | None = None  # "nodes" or "time" when aborted

    @property
    def tileable(self) -> bool:
        return self.status == TILEABLE


class _Search:
    def __init__(self, region: Region, tiles: TileSet,
                 node_limit: int | None, time_limit: float | None):
        self.tiles = list(tiles)
        self.order = region.scanline()
        index = {cell: i for i, cell in enumerate(self.order)}
        ntiles = len(self.tiles)
        full = (1 << ntiles) - 1

        by_color: list[dict[Color, int]] = [{} for _ in SIDES]
        for k, t in enumerate(self.tiles):
            for d, side in enumerate(SIDES):
                m = by_color[d]
                m[t.side(side)] = m.get(t.side(side), 0) | (1 << k)
        # compat[d][k]: tiles allowed across side d of tile k
        self.compat = [
            [by_color[SIDES.index(OPPOSITE[side])].get(t.side(side), 0) for t in self.tiles]
            for side in SIDES
        ]
        self.support: list[dict[int, int]] = [{} for _ in SIDES]

        self.dom = []
        self.nbrs = []
        for cell in self.order:
            d0 = full
            links = []
            for d, side in enumerate(SIDES):
                color = region.boundary.get((cell, side))
                if color is not None:
                    d0 &= by_color[d].get(color, 0)
                else:
                    links.append((d, index[neighbor(cell, side)]))
            self.dom.append(d0)
            self.nbrs.append(tuple(links))
        self.trail: list[tuple[int, int]] = []
        self.stats = SolveStats()
        self.node_limit = node_limit
        self.deadline = None if time_limit is None else time.monotonic() + time_limit
        self.start = time.monotonic()

    def _supported(self, d: int, mask: int) -> int:
        table = self.support[d]
        got = table.get(mask)
        if got is None:
            got = 0
            compat = self.compat[d]
            m = mask
            while m:
                low = m & -m
                got |= compat[low.bit_length() - 1]
                m ^= low
            table[mask] = got
        return got

    def _propagate(self, queue: list[int]) -> bool:
        dom, nbrs, trail = self.dom, self.nbrs, self.trail
        queued = set(queue)
        while queue:
            x = queue.pop()
            queued.discard(x)
            dx = dom[x]
            for d, y in nbrs[x]:
                dy = dom[y]
                nd = dy & self._supported(d, dx)
                if nd != dy:
                    if not nd:
                        return False
                    trail.append((y, dy))
                    dom[y] = nd
                    if y not in queued:
                        queued.add(y)
                        queue.append(y)
        return True

    def _undo(self, mark: int) -> None:
        dom, trail = self.dom, self.trail
        while len(trail) > mark:
            y, old = trail.pop()
            dom[y] = old

    def _next_open(self, pos: int) -> int | None:
        dom = self.dom
        for p in range(pos, len(dom)):
            v = dom[p]
            if v & (v - 1):
                return p
        return None

    def _tiling(self) -> Tiling:
        return Tiling({
            cell: self.tiles[self.dom[i].bit_length() - 1].id
            for i, cell in enumerate(self.order)
        })

    def _check_limits(self) -> None:
        if self.node_limit is not None and self.stats.nodes > self.node_limit:
            raise SolverAborted("nodes")
        if self.deadline is not None and self.stats.nodes % 256 == 0:
            if time.monotonic() > self.deadline:
                raise SolverAborted("time")

    def run(self) -> Iterator[Tiling]:
        if any(v == 0 for v in self.dom):
            return
        if not self._propagate(list(range(len(self.dom)))):
            return
        pos = self._next_open(0)
        if pos is None:
            yield self._tiling()
            return
        stack = [[pos, self.dom[pos], len(self.trail)]]
        self.stats.max_depth = 1
        while stack:
            frame = stack[-1]
            pos, rem, mark = frame
            self._undo(mark)
            if not rem:
                stack.pop()
                continue
            bit = rem & -rem
            frame[1] = rem ^ bit
            self.stats.nodes += 1
            self._check_limits()
            self.trail.append((pos, self.dom[pos]))
            self.dom[pos] = bit
            if not self._propagate([pos]):
                continue
            nxt = self._next_open(pos + 1)
            if nxt is None:
                yield self._tiling()
                continue
            stack.append([nxt, self.dom[nxt], len(self.trail)])
            if len(stack) > self.stats.max_depth:
                self.stats.max_depth = len(stack)


def iter_tilings(region: Region, tiles: TileSet, node_limit: int | None = None,
                 time_limit: float | None = None) -> Iterator[Tiling]:
    """Every tiling of ``region``, in search order.

    Raises :class:`SolverAborted` if a limit is hit before exhaustion.
    """
    if not region.cells:
        yield Tiling({})
        return
    yield from _Search(region, tiles, node_limit, time_limit).run()


def count_tilings(region: Region, tiles: TileSet, cap: int | None = None,
                  node_limit: int | None = None) -> int:
    """Number of tilings, stopping early once ``cap`` is reached."""
    n = 0
    for _ in iter_tilings(region, tiles, node_limit=node_limit):
        n += 1
        if cap is not None and n >= cap:
            break
    return n


def solve(region: Region, tiles: TileSet, node_limit: int | None = None,
          time_limit: float | None = None) -> SolveOutcome:
    """Decide whether ``region`` can be tiled by ``tiles``."""
    if not region.cells:
        return SolveOutcome(TILEABLE, Tiling({}))
    search = _Search(region, tiles, node_limit, time_limit)
    try:
        tiling = next(search.run(), None)
        status = TILEABLE if tiling is not None else UNTILEABLE
        limit = None
    except SolverAborted as exc:
        tiling, status, limit = None, ABORTED, str(exc)
    search.stats.wall_time = time.monotonic() - search.start
    return SolveOutcome(status, tiling, search.stats, limit)


# ---------------------------------------------------------------------------
# Direct construction


def _tileset(tiles: TileSet | str) -> TileSet:
    return builtin_tileset(tiles) if isinstance(tiles, str) else tiles


def _check_assignment(inst: Cm13Instance, assignment: Sequence[int]) -> tuple[int, ...]:
    a = tuple(int(bool(x)) for x in assignment)
    if len(a) != inst.n:
        raise NotOneInThree(f"assignment has {len(a)} values for {inst.n} variables")
    for c, clause in enumerate(inst.clauses, 1):
        if sum(a[x - 1] for x in clause) != 1:
            raise NotOneInThree(f"clause {c} {clause} does not have exactly one true literal")
    return a


def _crossover_anchors(plan: LayoutPlan, variant: str) -> tuple[dict[Cell, int], dict[Cell, int]]:
    """Left cells of the R diagonals and top-left cells of crossovers.

    Both map a cell to its sub-region's swap position (1-based row).
    """
    rights: dict[Cell, int] = {}
    crosses: dict[Cell, int] = {}
    x0 = 1
    for k, width in zip(plan.swaps, plan.widths):
        if variant == "w29" and k == 1:
            crosses[(x0, 0)] = k
        else:
            for row in range(1, k):
                rights[(x0 + k - row - 1, row - 1)] = k
            crosses[(x0, k - 1)] = k
        x0 += width
    return rights, crosses


def _notch_pattern(variant: str, signals: tuple[int, int, int]) -> dict[tuple[int, int], str]:
    """Clause group anchors (relative to the notch's top cell) for a 1-in-3 triple."""
    if variant == "w23":
        table = {
            (0, 0, 1): {(0, 0): "C0", (1, 1): "C0"},
            (0, 1, 0): {(0, 0): "C0", (1, 1): "C1"},
            (1, 0, 0): {(0, 0): "C1", (1, 1): "C1"},
        }
    else:
        table = {
            (0, 0, 1): {(0, 0): "C0", (2, 1): "C0"},
            (0, 1, 0): {(0, 0): "C0", (2, 1): "C1"},
            (1, 0, 0): {(0, 0): "C1", (2, 1): "C1"},
        }
    if signals not in table:
        raise NotOneInThree(f"clause receives signals {signals}")
    return table[signals]


def construct_tiling(inst: Cm13Instance, assignment: Sequence[int], variant: str = "w23",
                     swaps: Sequence[int] | None = None,
                     tiles: TileSet | None = None) -> Tiling:
    """Tile the reduction region for ``inst`` without search.

    Cells are resolved column by column, top to bottom.  Variable columns,
    R diagonals, crossovers and clause tiles are placed by designation; every
    other cell is a forwarder or left anchor picked by the color above it and
    the signal on its west.
    """
    a = _check_assignment(inst, assignment)
    t = tiles if tiles is not None else builtin_tileset(variant)
    region, plan = build_region(inst, variant, swaps)
    rights, crosses = _crossover_anchors(plan, variant)
    wc = plan.central_width

    fixed: dict[Cell, tuple[str, Cell]] = {}
    for v in range(inst.n):
        r0 = 4 * v
        if not a[v]:
            for k in range(3):
                fixed[(0, r0 + k)] = ("V0", (0, k))
        elif variant == "w23":
            for k in range(3):
                fixed[(0, r0 + k)] = ("V1", (0, 0))
        else:
            for k, g in enumerate(("V1x", "V1y", "V1x")):
                fixed[(0, r0 + k)] = (g, (0, 0))

    # families for free cells: color above -> group prefix
    free_family = {B: "F", L: "L"} if variant == "w23" else {L: "F", B: "L"}
    placements: dict[Cell, int] = {}
    cols: dict[int, list[Cell]] = {}
    for cell in region.cells:
        cols.setdefault(cell[0], []).append(cell)

    def east_of(cell: Cell) -> Color:
        left = (cell[0] - 1, cell[1])
        if left in placements:
            return t.by_id(placements[left]).east
        return region.boundary[(cell, "W")]

    def north_of(cell: Cell) -> Color:
        up = (cell[0], cell[1] - 1)
        if up in placements:
            return t.by_id(placements[up]).south
        return region.boundary[(cell, "N")]

    def designate(anchor: Cell, group: str) -> None:
        for tile in t.groups()[group]:
            oc, orow = tile.offset
            fixed[(anchor[0] + oc, anchor[1] + orow)] = (group, tile.offset)

    for col in sorted(cols):
        if col == wc + 1:
            for c in range(inst.n):
                r0 = 4 * c
                sig = tuple(int(east_of((col, r0 + k))) for k in range(3))
                for (dc, dr), group in _notch_pattern(variant, sig).items():
                    designate((col + dc, r0 + dr), group)
        for cell in sorted(cols[col], key=lambda c: c[1]):
            if cell not in fixed:
                if cell in rights:
                    designate(cell, f"R{east_of(cell)}")
                elif cell in crosses:
                    top = east_of(cell)
                    bottom = east_of((cell[0], cell[1] + 1))
                    group = f"X{bottom}{top}" if variant == "w23" else f"X{top}{bottom}"
                    designate(cell, group)
            if cell in fixed:
                group, offset = fixed[cell]
                placements[cell] = t.group_tile(group, offset).id
            else:
                family = free_family[north_of(cell)]
                placements[cell] = t.group_tile(f"{family}{east_of(cell)}", (0, 0)).id
    return Tiling(placements)


def extract_assignment(tiling: Tiling, inst: Cm13Instance,
                       tiles: TileSet | str = "w23") -> tuple[int, ...]:
    """Read each variable column: a V0 group means false, V1 tiles mean true."""
    t = _tileset(tiles)
    out = []
    for v in range(inst.n):
        groups = []
        for k in range(3):
            tid = tiling.placements.get((0, 4 * v + k))
            if tid is None:
                raise MalformedVariableColumn(f"variable x{v + 1} column is not covered")
            groups.append(t.by_id(tid).group)
        if all(g == "V0" for g in groups):
            out.append(0)
        elif all(g.startswith("V1") for g in groups):
            out.append(1)
        else:
            raise MalformedVariableColumn(f"variable x{v + 1} column mixes {groups}")
    return tuple(out)


def placements_by_group(tiling: Tiling, tiles: TileSet) -> Mapping[str, int]:
    """How many cells each tile group covers."""
    out: dict[str, int] = {}
    for tid in tiling.placements.values():
        g = tiles.by_id(tid).group
        out[g] = out.get(g, 0) + 1
    return out
