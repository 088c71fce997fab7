"""End-to-end acceptance checks, one test per criterion.

The summary section at the end of the pytest run prints one PASS/FAIL line
for each of these.
"""

import itertools
import random
import subprocess
import sys
import time

import pytest

from wangtiling.core import validate_tiling
from wangtiling.polytime import dispatch_branch, poly_solve, tile_bars
from wangtiling.core import WangTile, make_region
from wangtiling.reduction import (
    build_region,
    clause_subregion,
    crossover_subregion,
    layout_signals,
    realizes,
)
from wangtiling.satcheck import brute_force, enumerate_instances, random_instances
from wangtiling.solver import (
    TILEABLE,
    ABORTED,
    construct_tiling,
    extract_assignment,
    iter_tilings,
    solve,
)
from wangtiling.tilesets import build_rectangles, build_w23, build_w29, builtin_tileset, count_table

from helpers import random_region, random_small_tileset

NODE_LIMIT = 10_000_000


def test_criterion_1_tile_set_cardinalities():
    start = time.perf_counter()
    w23, w29 = build_w23(), build_w29()
    assert len(w23) == 23 and len(w23.groups()) == 14
    assert len(w29) == 29 and len(w29.groups()) == 15
    for t in w29:
        assert t.north != t.south and t.west != t.east
    assert time.perf_counter() - start < 1


def test_criterion_2_rectangle_derivation():
    start = time.perf_counter()
    w29 = build_w29()
    rects = build_rectangles(w29)
    assert len(rects) == 111
    table = count_table(rects, w29)
    totals = table["total"]
    assert [totals[r] for r in ("left anchors", "forwarders", "right anchors",
                                 "variables", "crossovers", "clauses")] == [10, 10, 16, 17, 42, 13]
    assert sum(table["fixed"].values()) == 3
    assert sum(totals.values()) + 3 == 111
    assert time.perf_counter() - start < 1


def test_criterion_3_gadget_forcing():
    start = time.perf_counter()
    for variant in ("w23", "w29"):
        tiles = builtin_tileset(variant)
        for w in range(3, 11):
            for h in range(w + 1, 13):
                for a, b in itertools.product((0, 1), repeat=2):
                    west = [0] * h
                    west[w - 1], west[w] = a, b
                    region = crossover_subregion(w, h, variant, west)
                    tilings = list(iter_tilings(region, tiles))
                    assert len(tilings) == 1, (variant, w, h, a, b)
                    rows = {cell[1] for cell, tid in tilings[0].placements.items()
                            if tiles.by_id(tid).group.startswith("X")}
                    assert rows == {w - 1, w}, (variant, w, h, a, b)
    assert time.perf_counter() - start < 30


# Clause tile patterns (relative cell -> group) for each tileable triple.
CLAUSE_PATTERNS = {
    "w23": {
        (0, 0, 1): {(0, 0): "C0", (0, 1): "F0", (1, 1): "C0", (0, 2): "F1", (1, 2): "F1"},
        (0, 1, 0): {(0, 0): "C0", (0, 1): "F1", (1, 1): "C1", (0, 2): "F0", (1, 2): "C1"},
        (1, 0, 0): {(0, 0): "C1", (0, 1): "C1", (1, 1): "C1", (0, 2): "F0", (1, 2): "C1"},
    },
    "w29": {
        (0, 0, 1): {(0, 0): "C0", (0, 1): "F0", (1, 1): "F1", (2, 1): "C0",
                    (0, 2): "L1", (1, 2): "L0", (2, 2): "F1", (3, 2): "F0"},
        (0, 1, 0): {(0, 0): "C0", (0, 1): "F1", (1, 1): "F0", (2, 1): "C1",
                    (0, 2): "L0", (1, 2): "L1", (2, 2): "C1", (3, 2): "C1"},
        (1, 0, 0): {(0, 0): "C1", (0, 1): "C1", (1, 1): "C1", (2, 1): "C1",
                    (0, 2): "L0", (1, 2): "L1", (2, 2): "C1", (3, 2): "C1"},
    },
}


def test_criterion_4_clause_forcing():
    start = time.perf_counter()
    for variant in ("w23", "w29"):
        tiles = builtin_tileset(variant)
        for triple in itertools.product((0, 1), repeat=3):
            tilings = list(iter_tilings(clause_subregion(variant, triple), tiles))
            if sum(triple) != 1:
                assert tilings == [], (variant, triple)
                continue
            assert len(tilings) == 1
            groups = {c: tiles.by_id(t).group for c, t in tilings[0].placements.items()}
            assert groups == CLAUSE_PATTERNS[variant][triple]
    assert time.perf_counter() - start < 5


def _criterion_5_instances():
    exhaustive = [i for n in (1, 2, 3) for i in enumerate_instances(n)]
    return exhaustive + random_instances(200, [4, 5, 6], seed=20240)


@pytest.fixture(scope="module")
def equivalence_runs():
    """Solve every criterion-5 instance once for both variants."""
    runs = []
    for inst in _criterion_5_instances():
        witness = brute_force(inst)
        for variant in ("w23", "w29"):
            region, _ = build_region(inst, variant)
            out = solve(region, builtin_tileset(variant), node_limit=NODE_LIMIT)
            runs.append((inst, variant, witness, region, out))
    return runs


@pytest.mark.slow
def test_criterion_5_end_to_end_equivalence(equivalence_runs):
    start = time.perf_counter()
    disagreements, aborts = [], []
    for inst, variant, witness, region, out in equivalence_runs:
        if out.status == ABORTED:
            aborts.append((inst, variant))
            continue
        if (out.status == TILEABLE) != (witness is not None):
            disagreements.append((inst, variant))
        if out.tiling is not None:
            tiles = builtin_tileset(variant)
            assert validate_tiling(region, tiles, out.tiling) == []
    assert len(equivalence_runs) == 2 * (1 + 2 + 10 + 200)
    assert disagreements == [] and aborts == []
    assert any(w is not None for _, _, w, _, _ in equivalence_runs)
    assert time.perf_counter() - start < 600


@pytest.mark.slow
def test_criterion_6_constructive_direction(equivalence_runs):
    satisfiable = 0
    for inst, variant, witness, region, _ in equivalence_runs:
        if witness is None:
            continue
        satisfiable += 1
        tiles = builtin_tileset(variant)
        tiling = construct_tiling(inst, witness, variant)
        assert validate_tiling(region, tiles, tiling) == []
        assert extract_assignment(tiling, inst, tiles) == witness
    assert satisfiable > 0


def test_criterion_7_worked_example(phi):
    start = time.perf_counter()
    plan = layout_signals(phi)
    assert plan.height == 11
    assert " ".join(plan.source_rows) == "x1 x1 x1 z1 x2 x2 x2 z2 x3 x3 x3"
    assert " ".join(plan.target_rows) == "x1 x1 x3 z1 x2 x2 x3 z2 x1 x2 x3"
    printed = (8, 7, 6, 5, 4, 3, 4, 5, 6, 9, 8, 7, 9, 8)
    assert realizes(plan.perm, printed)
    assert layout_signals(phi, printed).swaps == printed
    for variant in ("w23", "w29"):
        region, _ = build_region(phi, variant)
        tiles = builtin_tileset(variant)
        out = solve(region, tiles)
        assert out.status == TILEABLE
        assert validate_tiling(region, tiles, out.tiling) == []
        assert extract_assignment(out.tiling, phi, tiles) == (0, 0, 1)
    assert brute_force(phi) == (0, 0, 1)
    assert time.perf_counter() - start < 5


BAR_TILES = [WangTile(0, "1", "1", "a", "a"), WangTile(1, "1", "1", "a", "b"),
            WangTile(2, "1", "1", "b", "a")]


def _bar(length, west, east):
    cells = [(c, 0) for c in range(length)]
    boundary = {((c, 0), s): "1" for c in range(length) for s in ("N", "S")}
    boundary[((0, 0), "W")] = west
    boundary[((length - 1, 0), "E")] = east
    return make_region(cells, boundary)


def test_criterion_8_small_tile_sets():
    start = time.perf_counter()
    rng = random.Random(8)
    branches = {"single": 0, "side": 0, "corner": 0, "bars": 0}
    disagreements = 0
    trials = 0
    order = ("single", "side", "corner", "bars")
    while trials < 1000 or min(branches.values()) < 50:
        tiles = random_small_tileset(rng, order[trials % 4])
        region = random_region(rng, tiles, max_cells=30)
        branch = dispatch_branch(tiles)
        branches[branch] += 1
        fast = poly_solve(tiles, region)
        slow = solve(region, tiles)
        if fast.status != slow.status:
            disagreements += 1
        if fast.tiling is not None:
            assert validate_tiling(region, tiles, fast.tiling) == []
        trials += 1
    assert disagreements == 0
    assert min(branches.values()) >= 50, branches
    for length in range(2, 9):
        for west, east in itertools.product("ab", repeat=2):
            assert tile_bars(BAR_TILES, _bar(length, west, east)).status == TILEABLE
    assert tile_bars(BAR_TILES, _bar(1, "b", "b")).status != TILEABLE
    assert time.perf_counter() - start < 120


def _run_cli(*args, cwd):
    return subprocess.run([sys.executable, "-m", "wangtiling.cli", *args], cwd=cwd,
                          capture_output=True, check=False)


def test_criterion_9_determinism(tmp_path):
    (tmp_path / "phi.cm13").write_text("p cm13 3\n1 1 3\n2 2 3\n1 2 3\n")
    outputs = []
    for run in (1, 2):
        d = tmp_path / f"run{run}"
        d.mkdir()
        steps = [
            ("reduce", "--variant", "w29", "-i", "../phi.cm13", "-o", "region.json",
             "--plan", "plan.json"),
            ("solve", "-t", "w29", "-r", "region.json", "-o", "tiling.json"),
            ("render", "-r", "region.json", "--tiling", "tiling.json", "-t", "w29",
             "-o", "drawing.txt"),
            ("render", "-r", "region.json", "--tiling", "tiling.json", "-t", "w29",
             "--format", "svg", "-o", "drawing.svg"),
        ]
        stdouts = []
        for step in steps:
            res = _run_cli(*step, cwd=d)
            assert res.returncode == 0, res.stderr
            stdouts.append(res.stdout)
        files = {name: (d / name).read_bytes() for name in
                 ("region.json", "plan.json", "tiling.json", "drawing.txt", "drawing.svg")}
        outputs.append((stdouts, files))
    assert outputs[0] == outputs[1]
