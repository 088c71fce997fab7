import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from wangtiling.core import TileSet, Tiling, WangTile, make_region, validate_tiling
from wangtiling.errors import MalformedVariableColumn, NotOneInThree, SolverAborted
from wangtiling.formats import tiling_to_json
from wangtiling.reduction import Cm13Instance, build_region, crossover_subregion
from wangtiling.satcheck import eval_1in3
from wangtiling.solver import (
    ABORTED,
    TILEABLE,
    UNTILEABLE,
    construct_tiling,
    count_tilings,
    extract_assignment,
    iter_tilings,
    placements_by_group,
    solve,
)
from wangtiling.tilesets import build_w23, builtin_tileset

from helpers import random_region, random_shape


def naive_count(region, tiles):
    """Count tilings by trying every assignment of tiles to cells."""
    cells = sorted(region.cells)
    ids = [t.id for t in tiles]
    n = 0
    for combo in itertools.product(ids, repeat=len(cells)):
        if not validate_tiling(region, tiles, Tiling(dict(zip(cells, combo)))):
            n += 1
    return n


def single_cell(colors):
    n, s, w, e = colors
    return make_region([(0, 0)], {((0, 0), "N"): n, ((0, 0), "S"): s,
                                  ((0, 0), "W"): w, ((0, 0), "E"): e})


def test_single_cell_with_forwarder_colors():
    tiles = build_w23()
    f0 = tiles.group_tile("F0", (0, 0))
    out = solve(single_cell(f0.colors), tiles)
    assert out.status == TILEABLE
    assert out.tiling.placements == {(0, 0): f0.id}


def test_unknown_boundary_color_is_untileable():
    out = solve(single_cell(("b", "b", "0", "zz")), build_w23())
    assert out.status == UNTILEABLE


def test_phi_is_tileable_and_decodes(phi):
    for variant in ("w23", "w29"):
        tiles = builtin_tileset(variant)
        region, _ = build_region(phi, variant)
        out = solve(region, tiles)
        assert out.tileable
        assert validate_tiling(region, tiles, out.tiling) == []
        a = extract_assignment(out.tiling, phi, tiles)
        assert eval_1in3(phi, a)
        assert count_tilings(region, tiles, cap=3) == 1


def test_triple_x1_is_untileable():
    inst = Cm13Instance(1, ((1, 1, 1),))
    for variant in ("w23", "w29"):
        region, _ = build_region(inst, variant)
        assert solve(region, builtin_tileset(variant)).status == UNTILEABLE


def test_node_limit_aborts(phi):
    region, _ = build_region(phi, "w23")
    out = solve(region, build_w23(), node_limit=0)
    assert out.status == ABORTED and out.limit == "nodes"
    with pytest.raises(SolverAborted):
        list(iter_tilings(region, build_w23(), node_limit=0))


def test_solve_is_deterministic(phi):
    region, _ = build_region(phi, "w29")
    tiles = builtin_tileset("w29")
    a = tiling_to_json(solve(region, tiles).tiling)
    b = tiling_to_json(solve(region, tiles).tiling)
    assert a == b


def random_tileset(rng, size, colors="ab"):
    rows = set()
    while len(rows) < size:
        rows.add(tuple(rng.choice(colors) for _ in range(4)))
    return TileSet("random", tuple(WangTile(i, *r) for i, r in enumerate(sorted(rows))))


def random_colored_region(rng, tiles, size):
    cells = random_shape(rng, size)
    alphabet = sorted(tiles.alphabet) + ["junk"]
    boundary = {}
    for c in cells:
        for side in "NSWE":
            dc, dr = {"N": (0, -1), "S": (0, 1), "W": (-1, 0), "E": (1, 0)}[side]
            if (c[0] + dc, c[1] + dr) not in cells:
                boundary[(c, side)] = rng.choice(alphabet[:-1]) if rng.random() < 0.95 \
                    else "junk"
    return make_region(cells, boundary)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_agrees_with_naive_enumeration(seed):
    rng = random.Random(seed)
    size = rng.randint(1, 4)
    tiles = random_tileset(rng, size)
    max_cells = {1: 10, 2: 10, 3: 8, 4: 7}[size]
    if rng.random() < 0.5:
        region = random_region(rng, tiles, max_cells)
    else:
        region = random_colored_region(rng, tiles, rng.randint(1, max_cells))
    assert size ** len(region) <= 2 ** 20
    expected = naive_count(region, tiles)
    found = list(iter_tilings(region, tiles))
    assert len(found) == expected
    assert len({tiling_to_json(t) for t in found}) == expected
    for t in found:
        assert validate_tiling(region, tiles, t) == []
    out = solve(region, tiles)
    assert out.tileable == (expected > 0)


def test_crossover_with_equal_signals_places_straight_crossover():
    for variant in ("w23", "w29"):
        tiles = builtin_tileset(variant)
        for s in (0, 1):
            west = [0] * 11
            west[7] = west[8] = s
            tilings = list(iter_tilings(crossover_subregion(8, 11, variant, west), tiles))
            assert len(tilings) == 1
            groups = placements_by_group(tilings[0], tiles)
            assert groups[f"X{s}{s}"] == 2
            rows = {c[1] for c, t in tilings[0].placements.items()
                    if tiles.by_id(t).group.startswith("X")}
            assert rows == {7, 8}


SAT3 = Cm13Instance(3, ((1, 2, 3), (1, 2, 3), (1, 2, 3)))


@pytest.mark.parametrize("variant", ["w23", "w29"])
@pytest.mark.parametrize("assignment", [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
def test_construct_round_trip(variant, assignment):
    tiles = builtin_tileset(variant)
    region, plan = build_region(SAT3, variant)
    tiling = construct_tiling(SAT3, assignment, variant)
    assert validate_tiling(region, tiles, tiling) == []
    assert extract_assignment(tiling, SAT3, tiles) == assignment
    anchors = [t for t in tiling.placements.values()
               if tiles.by_id(t).group.startswith("X") and tiles.by_id(t).offset == (0, 0)]
    assert len(anchors) == len(plan.swaps)


def test_clause_triple_010_uses_one_c1_per_clause():
    tiles = build_w23()
    tiling = construct_tiling(SAT3, (0, 1, 0), "w23")
    # x1 x2 x3 in every clause: signals 0, 1, 0 arrive top-down
    assert placements_by_group(tiling, tiles)["C1"] == 2 * 3
    assert placements_by_group(tiling, tiles)["C0"] == 3


def test_construct_phi(phi):
    for variant in ("w23", "w29"):
        tiles = builtin_tileset(variant)
        region, _ = build_region(phi, variant)
        tiling = construct_tiling(phi, (0, 0, 1), variant)
        assert validate_tiling(region, tiles, tiling) == []
        assert extract_assignment(tiling, phi, tiles) == (0, 0, 1)
        assert tiling.placements == solve(region, tiles).tiling.placements


def test_construct_with_unit_swap():
    inst = Cm13Instance(3, ((2, 1, 3), (1, 2, 3), (1, 2, 3)))
    for variant in ("w23", "w29"):
        tiles = builtin_tileset(variant)
        region, plan = build_region(inst, variant)
        assert 1 in plan.swaps
        for a in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
            tiling = construct_tiling(inst, a, variant)
            assert validate_tiling(region, tiles, tiling) == []


def test_construct_rejects_non_solutions(phi):
    with pytest.raises(NotOneInThree):
        construct_tiling(phi, (1, 0, 0), "w23")
    with pytest.raises(NotOneInThree):
        construct_tiling(phi, (0, 1), "w23")


def test_extract_all_false_and_malformed():
    inst = Cm13Instance(1, ((1, 1, 1),))
    tiles = build_w23()
    v0 = [tiles.group_tile("V0", (0, k)).id for k in range(3)]
    column = Tiling({(0, k): v0[k] for k in range(3)})
    assert extract_assignment(column, inst, tiles) == (0,)
    v1 = tiles.group_tile("V1", (0, 0)).id
    mixed = Tiling({(0, 0): v0[0], (0, 1): v1, (0, 2): v1})
    with pytest.raises(MalformedVariableColumn):
        extract_assignment(mixed, inst, tiles)
    with pytest.raises(MalformedVariableColumn):
        extract_assignment(Tiling({}), inst, tiles)
