"""Wang tiles with colored boundaries: NP-hardness gadgets, exact search,
and polynomial-time cases for small tile sets."""

from .core import (
    GeneralizedTile,
    Region,
    TileSet,
    Tiling,
    Violation,
    WangTile,
    is_simply_connected,
    make_region,
    validate_tiling,
)
from .polytime import classify, color_deficiency, poly_solve
from .reduction import (
    Cm13Instance,
    LayoutPlan,
    build_region,
    build_region_w23,
    build_region_w29,
    decompose_adjacent,
    layout_signals,
    parse_instance,
)
from .satcheck import brute_force, equivalence_check, eval_1in3
from .solver import SolveOutcome, construct_tiling, extract_assignment, solve
from .tilesets import build_rectangles, build_w23, build_w29, count_table

__version__ = "0.1.0"

__all__ = [
    "Cm13Instance", "GeneralizedTile", "LayoutPlan", "Region", "SolveOutcome", "TileSet",
    "Tiling", "Violation", "WangTile", "brute_force", "build_rectangles", "build_region",
    "build_region_w23", "build_region_w29", "build_w23", "build_w29", "classify",
    "color_deficiency", "construct_tiling", "count_table", "decompose_adjacent",
    "equivalence_check", "eval_1in3", "extract_assignment", "is_simply_connected",
    "layout_signals", "make_region", "parse_instance", "poly_solve", "solve",
    "validate_tiling",
]
