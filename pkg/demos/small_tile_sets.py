"""
Three tiles or fewer
====================

With at most three distinct tiles, the tiles can be told apart by one side,
by a pair of neighboring sides, or else two opposite sides are each a single
color.  The first two cases are solved by forced placement, the last by
splitting the region into bars.
"""

from wangtiling import WangTile, classify, color_deficiency, make_region, poly_solve, solve
from wangtiling.polytime import tile_bars

# north, south, west, east
bar_tiles = [WangTile(0, "1", "1", "a", "a"), WangTile(1, "1", "1", "a", "b"),
             WangTile(2, "1", "1", "b", "a")]
print("deficiency", color_deficiency(bar_tiles), classify(bar_tiles).kind)


def bar(length, west, east):
    cells = [(c, 0) for c in range(length)]
    boundary = {((c, 0), s): "1" for c in range(length) for s in "NS"}
    boundary[((0, 0), "W")] = west
    boundary[((length - 1, 0), "E")] = east
    return make_region(cells, boundary)


for length in (1, 2, 3):
    print(length, [tile_bars(bar_tiles, bar(length, w, e)).status
                   for w, e in (("a", "a"), ("a", "b"), ("b", "a"), ("b", "b"))])

# two tiles share north and west; the third differs on both
corner_tiles = [WangTile(0, "0", "s", "a", "c"), WangTile(1, "0", "s", "a", "d"),
                WangTile(2, "1", "s", "b", "c")]
print(classify(corner_tiles).kind, classify(corner_tiles).sides)

one = make_region([(0, 0)], {((0, 0), "N"): "0", ((0, 0), "S"): "s",
                             ((0, 0), "W"): "a", ((0, 0), "E"): "c"})
print(poly_solve(corner_tiles, one).status, dict(poly_solve(corner_tiles, one).tiling.placements))

# side by side, tile 2 needs west color b but nothing produces it on the east
cells = [(0, 0), (1, 0)]
boundary = {((0, 0), "N"): "0", ((1, 0), "N"): "1", ((0, 0), "S"): "s", ((1, 0), "S"): "s",
            ((0, 0), "W"): "a", ((1, 0), "E"): "c"}
region = make_region(cells, boundary)
fast = poly_solve(corner_tiles, region)
print(fast.status, dict(fast.tiling.placements) if fast.tiling else None)
print("search agrees:", solve(region, corner_tiles).status == fast.status)
