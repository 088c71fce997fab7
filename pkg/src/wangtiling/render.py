"""ASCII and SVG drawings of regions and tilings.

ASCII output is a character grid of ``2h+1`` rows by ``2w+1`` columns over
the bounding box: odd/odd positions are cells (tile group initial, ``.`` when
empty), other odd positions are edges (boundary color, blank inside).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .core import Color, Region, TileSet, Tiling, is_glue, validate_tiling
from .errors import InvalidTiling

SHOW_ALL = frozenset({"region", "tiling", "colors"})


@dataclass(frozen=True)
class RenderOptions:
    format: str = "ascii"
    show: frozenset[str] = SHOW_ALL
    scale: int = 24

    def __post_init__(self) -> None:
        if self.format not in ("ascii", "svg"):
            raise ValueError(f"unknown render format {self.format!r}")
        if self.scale <= 0:
            raise ValueError("scale must be positive")
        unknown = set(self.show) - SHOW_ALL
        if unknown:
            raise ValueError(f"unknown show flags {sorted(unknown)}")


def color_glyph(color: Color) -> str:
    if color == "0p":
        return "'"
    if is_glue(color):
        return "#"
    return color[:1] or "?"


def _groups(region: Region, tiles: TileSet | None, tiling: Tiling | None) -> dict:
    if tiling is None:
        return {}
    if tiles is None:
        raise ValueError("drawing a tiling needs its tile set")
    if validate_tiling(region, tiles, tiling):
        raise InvalidTiling("tiling does not fit the region")
    return {cell: tiles.by_id(tid).group for cell, tid in tiling.placements.items()}


def render_ascii(region: Region, tiles: TileSet | None = None, tiling: Tiling | None = None,
                 opts: RenderOptions = RenderOptions()) -> str:
    if not region.cells:
        return "\n"
    groups = _groups(region, tiles, tiling)
    c0, r0, c1, r1 = region.bbox()
    w, h = c1 - c0 + 1, r1 - r0 + 1
    grid = [[" "] * (2 * w + 1) for _ in range(2 * h + 1)]
    for (c, r) in region.cells:
        x, y = 2 * (c - c0) + 1, 2 * (r - r0) + 1
        glyph = "."
        if "tiling" in opts.show and (c, r) in groups:
            glyph = groups[(c, r)][:1] or "?"
        grid[y][x] = glyph
        for dx, dy in ((-1, -1), (1, -1), (-1, 1), (1, 1)):
            grid[y + dy][x + dx] = "+"
    for ((c, r), side), color in region.boundary.items():
        x, y = 2 * (c - c0) + 1, 2 * (r - r0) + 1
        dx, dy = {"N": (0, -1), "S": (0, 1), "W": (-1, 0), "E": (1, 0)}[side]
        if "colors" in opts.show:
            grid[y + dy][x + dx] = color_glyph(color)
        else:
            grid[y + dy][x + dx] = "-" if dx == 0 else "|"
    lines = ["".join(row).rstrip() for row in grid]
    if groups and "tiling" in opts.show:
        counts: dict[str, int] = {}
        for g in groups.values():
            counts[g] = counts.get(g, 0) + 1
        lines.append("")
        lines += [f"{g:>4} x{counts[g]}" for g in sorted(counts)]
    return "\n".join(lines) + "\n"


def group_fill(group: str) -> str:
    """A fixed pastel color derived from the group name."""
    digest = hashlib.md5(group.encode("utf-8")).digest()
    r, g, b = (128 + d // 2 for d in digest[:3])
    return f"#{r:02x}{g:02x}{b:02x}"


def render_svg(region: Region, tiles: TileSet | None = None, tiling: Tiling | None = None,
               opts: RenderOptions = RenderOptions(format="svg")) -> str:
    s = opts.scale
    if not region.cells:
        return ('<svg xmlns="http://www.w3.org/2000/svg" width="0" height="0"></svg>\n')
    groups = _groups(region, tiles, tiling)
    c0, r0, c1, r1 = region.bbox()
    width, height = (c1 - c0 + 1) * s, (r1 - r0 + 1) * s
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width + 2}" height="{height + 2}" '
        f'viewBox="-1 -1 {width + 2} {height + 2}" font-family="monospace">'
    ]
    font = max(s // 3, 4)
    for (c, r) in sorted(region.cells, key=lambda cell: (cell[1], cell[0])):
        x, y = (c - c0) * s, (r - r0) * s
        group = groups.get((c, r)) if "tiling" in opts.show else None
        fill = group_fill(group) if group else "#ffffff"
        out.append(f'<rect x="{x}" y="{y}" width="{s}" height="{s}" fill="{fill}" '
                   f'stroke="#999999" stroke-width="0.5"/>')
        if group:
            out.append(f'<text x="{x + s / 2:g}" y="{y + s / 2 + font / 3:g}" '
                       f'font-size="{font}" text-anchor="middle">{escape(group)}</text>')
    if "region" in opts.show or "colors" in opts.show:
        for ((c, r), side), color in sorted(region.boundary.items(),
                                            key=lambda kv: (kv[0][0][1], kv[0][0][0], kv[0][1])):
            x, y = (c - c0) * s, (r - r0) * s
            x1, y1, x2, y2 = {
                "N": (x, y, x + s, y), "S": (x, y + s, x + s, y + s),
                "W": (x, y, x, y + s), "E": (x + s, y, x + s, y + s),
            }[side]
            if "region" in opts.show:
                out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                           f'stroke="#000000" stroke-width="1.5"/>')
            if "colors" in opts.show:
                tx = (x1 + x2) / 2 + {"W": font / 2, "E": -font / 2}.get(side, 0)
                ty = (y1 + y2) / 2 + {"N": font, "S": -font / 4}.get(side, font / 3)
                label = "0'" if color == "0p" else ("#" if is_glue(color) else color)
                out.append(f'<text x="{tx:g}" y="{ty:g}" font-size="{font * 0.8:g}" '
                           f'text-anchor="middle" fill="#aa0000">{escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(region: Region, tiles: TileSet | None = None, tiling: Tiling | None = None,
           opts: RenderOptions = RenderOptions()) -> str:
    if opts.format == "svg":
        return render_svg(region, tiles, tiling, opts)
    return render_ascii(region, tiles, tiling, opts)
