"""Random tile sets and regions shared by several test modules."""

import random

from wangtiling.core import OPPOSITE, SIDES, WangTile, boundary_edges, make_region, neighbor


def _tiles(rows):
    return [WangTile(i, *colors) for i, colors in enumerate(rows)]


def random_small_tileset(rng: random.Random, branch: str) -> list[WangTile]:
    """At most three distinct tiles that reach the requested dispatch branch."""
    c = lambda: rng.choice("abc")  # noqa: E731
    if branch == "single":
        n, w = c(), c()
        s, e = rng.choice([n, c()]), rng.choice([w, c()])
        return _tiles([(n, s, w, e)] * rng.randint(1, 3))
    if branch == "side":
        # south colors reuse north colors and east reuses west, so that
        # larger shapes are often tileable
        size = rng.randint(2, 3)
        firsts = rng.sample("xyz", size)
        rows = [(f, rng.choice(firsts + ["q"]), rng.choice("ab"), rng.choice("ab"))
                for f in firsts]
        k = rng.randrange(4)
        return _tiles([_rotate(r, k) for r in rows])
    if branch == "corner":
        # two tiles agree on north and west, the third differs on both
        e0, e1 = rng.sample("ab", 2)
        s0 = rng.choice("01")
        rows = [("0", s0, "a", e0), ("0", s0, "a", e1), ("1", s0, "b", e0)]
        k = rng.randrange(4)
        return _tiles([_rotate(r, k) for r in rows])
    if branch == "bars":
        n, s = rng.choice([("1", "1"), ("1", "2")])
        pairs = rng.sample([("a", "a"), ("a", "b"), ("b", "a"), ("b", "b")], 3)
        rows = [(n, s, w, e) for w, e in pairs]
        if rng.random() < 0.5:
            rows = [(w, e, n, s) for n, s, w, e in rows]
        return _tiles(rows)
    raise ValueError(branch)


def _rotate(colors, k):
    """Rotate (N, S, W, E) colors by k quarter turns clockwise."""
    n, s, w, e = colors
    for _ in range(k):
        n, e, s, w = w, n, e, s
    return (n, s, w, e)


def random_shape(rng: random.Random, size: int) -> set:
    cells = {(0, 0)}
    while len(cells) < size:
        cell = rng.choice(sorted(cells))
        cells.add(neighbor(cell, rng.choice(SIDES)))
    return cells


def random_region(rng: random.Random, tiles, max_cells: int = 30):
    """A random polyomino (holes allowed) with mostly plausible boundary colors.

    Boundary colors are read off a greedy random placement that tries to match
    already placed neighbors, then a few edges may be recolored from the
    alphabet plus one junk color.
    """
    tiles = list(tiles)
    cells = random_shape(rng, rng.randint(1, max_cells))
    placed = _plant(rng, tiles, sorted(cells, key=lambda x: (x[1], x[0])))
    alphabet = sorted({x for t in tiles for x in t.colors}) + ["junk"]
    boundary = {}
    for cell, side in boundary_edges(cells):
        boundary[(cell, side)] = placed[cell].side(side)
    edges = sorted(boundary)
    for _ in range(rng.choice([0, 0, 0, 1, 2])):
        boundary[rng.choice(edges)] = rng.choice(alphabet)
    return make_region(cells, boundary)


def _plant(rng, tiles, order, budget=2000):
    """Random interior-consistent placement by backtracking, else a random one."""
    placed = {}
    steps = [0]

    def fits(cell, t):
        for s in SIDES:
            nb = neighbor(cell, s)
            if nb in placed and placed[nb].side(OPPOSITE[s]) != t.side(s):
                return False
        return True

    def rec(i):
        if i == len(order):
            return True
        steps[0] += 1
        if steps[0] > budget:
            return False
        cell = order[i]
        for t in rng.sample(tiles, len(tiles)):
            if fits(cell, t):
                placed[cell] = t
                if rec(i + 1):
                    return True
                del placed[cell]
        return False

    if rec(0):
        return placed
    return {cell: rng.choice(tiles) for cell in order}
