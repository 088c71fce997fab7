"""JSON serialization with canonical byte output.

Every document except the rectangle listing carries ``"version": 1``;
readers reject any other version.
"""

from __future__ import annotations

import json
from typing import Any

from .core import SIDES, Region, TileSet, Tiling, WangTile, make_region
from .errors import FormatError
from .reduction import LayoutPlan
from .tilesets import RectangleSet

FORMAT_VERSION = 1


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=1, sort_keys=False) + "\n"


def _load(text: str, kind: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{kind}: invalid JSON ({exc})") from None
    if not isinstance(doc, dict):
        raise FormatError(f"{kind}: top level must be an object")
    version = doc.get("version")
    if version != FORMAT_VERSION:
        raise FormatError(f"{kind}: unsupported format version {version!r}")
    return doc


def _cell(value: Any) -> tuple[int, int]:
    if (not isinstance(value, list) or len(value) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in value)):
        raise FormatError(f"bad cell {value!r}")
    return (value[0], value[1])


def _row_major(cell: tuple[int, int]) -> tuple[int, int]:
    return (cell[1], cell[0])


# Tile sets


def tileset_to_doc(t: TileSet) -> dict:
    return {
        "version": FORMAT_VERSION,
        "name": t.name,
        "tiles": [
            {"id": x.id, "n": x.north, "s": x.south, "w": x.west, "e": x.east,
             "group": x.group, "offset": list(x.offset)}
            for x in t.tiles
        ],
    }


def tileset_to_json(t: TileSet) -> str:
    return dumps(tileset_to_doc(t))


def tileset_from_json(text: str) -> TileSet:
    doc = _load(text, "tile set")
    try:
        tiles = tuple(
            WangTile(int(x["id"]), str(x["n"]), str(x["s"]), str(x["w"]), str(x["e"]),
                     str(x.get("group", "")), _cell(x.get("offset", [0, 0])))
            for x in doc["tiles"]
        )
        return TileSet(str(doc["name"]), tiles)
    except (KeyError, TypeError) as exc:
        raise FormatError(f"tile set: missing or malformed field {exc}") from None
    except ValueError as exc:
        raise FormatError(f"tile set: {exc}") from None


# Regions


def region_to_doc(region: Region) -> dict:
    side_rank = {s: i for i, s in enumerate(SIDES)}
    boundary = sorted(region.boundary.items(),
                      key=lambda kv: (_row_major(kv[0][0]), side_rank[kv[0][1]]))
    return {
        "version": FORMAT_VERSION,
        "cells": [list(c) for c in sorted(region.cells, key=_row_major)],
        "boundary": [{"cell": list(cell), "side": side, "color": color}
                     for (cell, side), color in boundary],
    }


def region_to_json(region: Region) -> str:
    return dumps(region_to_doc(region))


def region_from_json(text: str) -> Region:
    doc = _load(text, "region")
    try:
        cells = [_cell(c) for c in doc["cells"]]
        boundary = {}
        for entry in doc["boundary"]:
            side = entry["side"]
            if side not in SIDES:
                raise FormatError(f"region: bad side {side!r}")
            boundary[(_cell(entry["cell"]), side)] = str(entry["color"])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"region: missing or malformed field {exc}") from None
    if not cells:
        if boundary:
            raise FormatError("region: boundary colors on an empty region")
        return Region.empty()
    return make_region(cells, boundary)


# Tilings


def tiling_to_doc(tiling: Tiling) -> dict:
    return {
        "version": FORMAT_VERSION,
        "placements": [{"cell": list(c), "tile": tiling.placements[c]}
                       for c in sorted(tiling.placements, key=_row_major)],
    }


def tiling_to_json(tiling: Tiling) -> str:
    return dumps(tiling_to_doc(tiling))


def tiling_from_json(text: str) -> Tiling:
    doc = _load(text, "tiling")
    try:
        return Tiling({_cell(p["cell"]): int(p["tile"]) for p in doc["placements"]})
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"tiling: missing or malformed field {exc}") from None


# Layout plans and rectangles (output only)


def plan_to_doc(plan: LayoutPlan) -> dict:
    return {
        "version": FORMAT_VERSION,
        "height": plan.height,
        "source_rows": list(plan.source_rows),
        "target_rows": list(plan.target_rows),
        "perm": list(plan.perm),
        "swaps": list(plan.swaps),
        "widths": list(plan.widths),
        "pad_columns": plan.pad_columns,
        "central_width": plan.central_width,
    }


def plan_to_json(plan: LayoutPlan) -> str:
    return dumps(plan_to_doc(plan))


def rectangles_to_json(r: RectangleSet) -> str:
    """Distinct sizes as a bare array of ``{width, height, families}``."""
    rows = [
        {"width": w, "height": h, "families": sorted({s.family for s in specs})}
        for (w, h), specs in r.sizes.items()
    ]
    return dumps(rows)
