"""Compile Cubic Monotone 1-in-3 SAT instances into colored regions.

Region layout (rows top-down, ``H = 4n - 1``):

* column 0 holds the variable columns, three cells per variable at rows
  ``4(v-1) .. 4(v-1)+2``; redundant rows ``4i - 1`` have no cell there;
* columns ``1 .. Wc`` are the central part, full height, cut into crossover
  sub-regions left to right (one per adjacent transposition) plus padding;
* columns ``Wc+1 ..`` hold one clause notch per clause at that clause's rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .core import Cell, Color, Edge, Region, make_region
from .errors import (
    ClauseArity,
    CountMismatch,
    FormatError,
    NegationPresent,
    NotCubic,
    WidthOutOfRange,
)
from .tilesets import B, L, ONE, R, V, ZERO, ZERO_P

VARIANTS = ("w23", "w29")


@dataclass(frozen=True)
class Cm13Instance:
    n: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.n < 1:
            raise CountMismatch("an instance needs at least one variable")
        for clause in self.clauses:
            if len(clause) != 3:
                raise ClauseArity(f"clause {clause} has {len(clause)} literals")
            for x in clause:
                if x < 0:
                    raise NegationPresent(f"negated literal {x} in {clause}")
        if len(self.clauses) != self.n:
            raise CountMismatch(f"{len(self.clauses)} clauses for {self.n} variables")
        counts = [0] * (self.n + 1)
        for clause in self.clauses:
            for x in clause:
                if not 1 <= x <= self.n:
                    raise NotCubic(f"variable index {x} outside 1..{self.n}")
                counts[x] += 1
        bad = [v for v in range(1, self.n + 1) if counts[v] != 3]
        if bad:
            raise NotCubic(f"variable x{bad[0]} occurs {counts[bad[0]]} times, expected 3")

    @property
    def height(self) -> int:
        return 4 * self.n - 1

    def canonical(self) -> "Cm13Instance":
        return Cm13Instance(self.n, tuple(sorted(tuple(sorted(c)) for c in self.clauses)))


def parse_instance(text: str) -> Cm13Instance:
    """Parse ``p cm13 <n>`` followed by ``n`` lines of three variable indices."""
    n = None
    clauses: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None or len(parts) != 3 or parts[1] != "cm13":
                raise FormatError(f"line {lineno}: bad header {raw!r}")
            try:
                n = int(parts[2])
            except ValueError:
                raise FormatError(f"line {lineno}: bad variable count {parts[2]!r}") from None
            continue
        if n is None:
            raise FormatError(f"line {lineno}: clause before 'p cm13 <n>' header")
        try:
            lits = tuple(int(p) for p in parts)
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer literal in {raw!r}") from None
        if any(x < 0 for x in lits):
            raise NegationPresent(f"line {lineno}: negated literal in {raw!r}")
        if len(lits) != 3:
            raise ClauseArity(f"line {lineno}: {len(lits)} literals")
        clauses.append(lits)
    if n is None:
        raise FormatError("missing 'p cm13 <n>' header")
    return Cm13Instance(n, tuple(clauses))  # type: ignore[arg-type]


def format_instance(inst: Cm13Instance) -> str:
    lines = [f"p cm13 {inst.n}"]
    lines += [" ".join(str(x) for x in clause) for clause in inst.clauses]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Signal layout


@dataclass(frozen=True)
class LayoutPlan:
    """Row bookkeeping of the reduction; row indices in ``swaps`` are 1-based."""

    height: int
    source_rows: tuple[str, ...]
    target_rows: tuple[str, ...]
    perm: tuple[int, ...]  # perm[i] = 0-based target position of source row i
    swaps: tuple[int, ...]
    widths: tuple[int, ...]
    padded: bool = False
    pad_columns: int = 0

    @property
    def central_width(self) -> int:
        return sum(self.widths) + self.pad_columns


def apply_swaps(seq: Sequence, swaps: Iterable[int]) -> list:
    """Apply ``swap(k)`` (exchange 1-based positions k and k+1) in order."""
    out = list(seq)
    for k in swaps:
        if not 1 <= k < len(out):
            raise ValueError(f"swap({k}) out of range for {len(out)} rows")
        out[k - 1], out[k] = out[k], out[k - 1]
    return out


def realizes(perm: Sequence[int], swaps: Iterable[int]) -> bool:
    """True iff the swaps move every source position i to position perm[i]."""
    arranged = apply_swaps(range(len(perm)), swaps)
    return all(arranged[perm[i]] == i for i in range(len(perm)))


def decompose_adjacent(perm: Sequence[int]) -> tuple[int, ...]:
    """Adjacent transpositions realizing ``perm``, found by bubble sort."""
    arr = list(range(len(perm)))
    swaps = []
    for end in range(len(arr) - 1, 0, -1):
        moved = False
        for p in range(end):
            if perm[arr[p]] > perm[arr[p + 1]]:
                arr[p], arr[p + 1] = arr[p + 1], arr[p]
                swaps.append(p + 1)
                moved = True
        if not moved:
            break
    return tuple(swaps)


def source_rows(inst: Cm13Instance) -> tuple[str, ...]:
    rows: list[str] = []
    for v in range(1, inst.n + 1):
        rows += [f"x{v}"] * 3
        if v < inst.n:
            rows.append(f"z{v}")
    return tuple(rows)


def target_rows(inst: Cm13Instance) -> tuple[str, ...]:
    rows: list[str] = []
    for c, clause in enumerate(inst.clauses, 1):
        rows += [f"x{x}" for x in clause]
        if c < inst.n:
            rows.append(f"z{c}")
    return tuple(rows)


def layout_signals(inst: Cm13Instance, swaps: Sequence[int] | None = None) -> LayoutPlan:
    """Source/target rows, their bijection, and an adjacent-swap schedule.

    The j-th occurrence of a variable in clause reading order is wired to that
    variable's j-th source row.  ``swaps`` overrides the bubble-sort schedule
    (it must realize the same permutation).
    """
    src, tgt = source_rows(inst), target_rows(inst)
    slots: dict[str, list[int]] = {}
    for pos, label in enumerate(tgt):
        slots.setdefault(label, []).append(pos)
    used: dict[str, int] = {}
    perm = []
    for label in src:
        k = used.get(label, 0)
        perm.append(slots[label][k])
        used[label] = k + 1
    perm_t = tuple(perm)
    if swaps is None:
        swaps_t = decompose_adjacent(perm_t)
    else:
        swaps_t = tuple(swaps)
        if not realizes(perm_t, swaps_t):
            raise ValueError("swap sequence does not realize the layout permutation")
    return LayoutPlan(
        height=inst.height,
        source_rows=src,
        target_rows=tgt,
        perm=perm_t,
        swaps=swaps_t,
        widths=swaps_t,
    )


# ---------------------------------------------------------------------------
# Crossover sub-regions

_FLIP = {B: L, L: B}


def _flip(color: Color, times: int) -> Color:
    return _FLIP[color] if times % 2 else color


def build_crossover_boundary(width: int, height: int, variant: str = "w23"
                             ) -> tuple[tuple[Color, ...], tuple[Color, ...]]:
    """Top and bottom colors (left to right) of a crossover sub-region.

    The sub-region swaps the signals on rows ``width`` and ``width + 1``.
    """
    if variant == "w23":
        if not 1 <= width <= height - 1:
            raise WidthOutOfRange(f"width {width} not in 1..{height - 1}")
        return (B,) * (width - 1) + (R,), (L,) + (B,) * (width - 1)
    if variant != "w29":
        raise ValueError(f"unknown variant {variant!r}")
    if not 2 <= width <= height - 1:
        raise WidthOutOfRange(f"width {width} not in 2..{height - 1}")
    k, odd = divmod(width, 2)
    top = ((L,) if odd else ()) + (B, L) * (k - 1) + (B, R)
    bottom = []
    for c, t in enumerate(top):
        if t == R:
            bottom.append(_flip(B, height - 1))
        else:
            bottom.append(_flip(t, height))
    # The first segment breaks the checkerboard and forces the crossover.
    bottom[0] = _FLIP[bottom[0]]
    return top, tuple(bottom)


def unit_swap_boundary_w29(height: int) -> tuple[tuple[Color, ...], tuple[Color, ...]]:
    """Two-column W29 sub-region swapping rows 1 and 2.

    The crossover sits directly under the top ``r``; the second column only
    gives a 2x2 crossover room and keeps the column count even.
    """
    if height < 3:
        raise WidthOutOfRange("unit swap needs at least 3 rows")
    below = _flip(B, height - 2)
    return (R, B), (below, below)


def pad_column(height: int, variant: str) -> tuple[Color, Color]:
    """Top and bottom color of a filler column carrying signals unchanged."""
    if variant == "w23":
        return B, B
    return B, _flip(B, height)


# ---------------------------------------------------------------------------
# Regions


@dataclass
class _Builder:
    cells: set[Cell] = field(default_factory=set)
    boundary: dict[Edge, Color] = field(default_factory=dict)

    def add(self, cell: Cell, **sides: Color) -> None:
        self.cells.add(cell)
        for side, color in sides.items():
            self.boundary[(cell, side)] = color

    def color(self, cell: Cell, side: str, color: Color) -> None:
        self.boundary[(cell, side)] = color


def _central_columns(plan: LayoutPlan, variant: str) -> tuple[list[tuple[Color, Color]], LayoutPlan]:
    """Per central column (top, bottom) colors, plus the plan with final widths."""
    h = plan.height
    cols: list[tuple[Color, Color]] = []
    widths = []
    for k in plan.swaps:
        if variant == "w29" and k == 1:
            top, bottom = unit_swap_boundary_w29(h)
        else:
            top, bottom = build_crossover_boundary(k, h, variant)
        widths.append(len(top))
        cols.extend(zip(top, bottom))
    pads = 0
    if variant == "w23":
        if not cols:
            pads = 1
    else:
        if not cols:
            pads = 2
        elif len(cols) % 2:
            pads = 1
    cols.extend([pad_column(h, variant)] * pads)
    return cols, replace(plan, widths=tuple(widths), padded=pads > 0, pad_columns=pads)


def _build_region(inst: Cm13Instance, variant: str, swaps: Sequence[int] | None
                  ) -> tuple[Region, LayoutPlan]:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    plan = layout_signals(inst, swaps)
    h = plan.height
    columns, plan = _central_columns(plan, variant)
    wc = len(columns)
    b = _Builder()

    var_top, var_bottom = (B, B) if variant == "w23" else (L, B)
    for v in range(inst.n):
        r0 = 4 * v
        b.add((0, r0), W=V, N=var_top)
        b.add((0, r0 + 1), W=V)
        b.add((0, r0 + 2), W=V, S=var_bottom)

    for j, (top, bottom) in enumerate(columns, 1):
        for r in range(h):
            b.add((j, r))
        b.color((j, 0), "N", top)
        b.color((j, h - 1), "S", bottom)
    for r in range(3, h, 4):
        b.color((1, r), "W", ZERO)
        b.color((wc, r), "E", ZERO)

    x = wc + 1
    for c in range(inst.n):
        r0 = 4 * c
        if variant == "w23":
            b.add((x, r0), N=B, E=ZERO_P)
            b.add((x, r0 + 1))
            b.add((x + 1, r0 + 1), N=B, E=ZERO_P)
            b.add((x, r0 + 2), S=B)
            b.add((x + 1, r0 + 2), S=B, E=ONE)
        else:
            b.add((x, r0), N=B, E=ZERO_P)
            b.add((x, r0 + 1))
            b.add((x + 1, r0 + 1), N=L)
            b.add((x + 2, r0 + 1), N=B, E=ZERO_P)
            b.add((x, r0 + 2), S=L)
            b.add((x + 1, r0 + 2), S=L)
            b.add((x + 2, r0 + 2), S=B)
            b.add((x + 3, r0 + 2), N=L, S=B, E=ONE)
    return make_region(b.cells, b.boundary), plan


def build_region_w23(inst: Cm13Instance, swaps: Sequence[int] | None = None
                     ) -> tuple[Region, LayoutPlan]:
    return _build_region(inst, "w23", swaps)


def build_region_w29(inst: Cm13Instance, swaps: Sequence[int] | None = None
                     ) -> tuple[Region, LayoutPlan]:
    return _build_region(inst, "w29", swaps)


def build_region(inst: Cm13Instance, variant: str, swaps: Sequence[int] | None = None
                 ) -> tuple[Region, LayoutPlan]:
    return _build_region(inst, variant, swaps)


def crossover_subregion(width: int, height: int, variant: str,
                        west: Sequence[int], east: Sequence[int] | None = None) -> Region:
    """An isolated crossover sub-region with signal colors on both sides.

    ``west`` gives the incoming signal per row; ``east`` defaults to the
    signals after the swap (toggled once per column for W29).
    """
    top, bottom = build_crossover_boundary(width, height, variant)
    if len(west) != height:
        raise ValueError("need one west signal per row")
    if east is None:
        east = apply_swaps(west, [width])
        if variant == "w29" and width % 2:
            east = [1 - s for s in east]
    cells = [(c, r) for r in range(height) for c in range(width)]
    boundary: dict[Edge, Color] = {}
    for c in range(width):
        boundary[((c, 0), "N")] = top[c]
        boundary[((c, height - 1), "S")] = bottom[c]
    for r in range(height):
        boundary[((0, r), "W")] = str(west[r])
        boundary[((width - 1, r), "E")] = str(east[r])
    return make_region(cells, boundary)


def clause_subregion(variant: str, signals: Sequence[int]) -> Region:
    """An isolated clause notch fed by three incoming signals (top-down)."""
    if len(signals) != 3:
        raise ValueError("a clause notch takes exactly three signals")
    b = _Builder()
    s = [str(x) for x in signals]
    if variant == "w23":
        b.add((0, 0), N=B, E=ZERO_P, W=s[0])
        b.add((0, 1), W=s[1])
        b.add((1, 1), N=B, E=ZERO_P)
        b.add((0, 2), S=B, W=s[2])
        b.add((1, 2), S=B, E=ONE)
    elif variant == "w29":
        b.add((0, 0), N=B, E=ZERO_P, W=s[0])
        b.add((0, 1), W=s[1])
        b.add((1, 1), N=L)
        b.add((2, 1), N=B, E=ZERO_P)
        b.add((0, 2), S=L, W=s[2])
        b.add((1, 2), S=L)
        b.add((2, 2), S=B)
        b.add((3, 2), N=L, S=B, E=ONE)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return make_region(b.cells, b.boundary)
