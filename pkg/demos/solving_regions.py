"""
Solving and constructing tilings
================================

The exact solver keeps a set of candidate tiles per cell and prunes them after
every choice.  On reduction regions the boundary colors alone determine almost
everything: a satisfiable formula is tiled after one or two branching nodes.
"""

from wangtiling import (
    Cm13Instance,
    build_region_w29,
    construct_tiling,
    extract_assignment,
    solve,
    validate_tiling,
)
from wangtiling.render import render_ascii
from wangtiling.solver import count_tilings
from wangtiling.tilesets import build_w29

phi = Cm13Instance(3, ((1, 1, 3), (2, 2, 3), (1, 2, 3)))
tiles = build_w29()
region, plan = build_region_w29(phi)

out = solve(region, tiles)
print(out.status, out.stats)
print("assignment read off the variable column:", extract_assignment(out.tiling, phi, tiles))
print("number of tilings:", count_tilings(region, tiles))

# the same tiling, built directly from the satisfying assignment
built = construct_tiling(phi, (0, 0, 1), "w29")
print("valid:", validate_tiling(region, tiles, built) == [])
print("same as the solver's:", dict(built.placements) == dict(out.tiling.placements))

# an unsatisfiable formula gives an untileable region
x1x1x1 = Cm13Instance(1, ((1, 1, 1),))
print(solve(build_region_w29(x1x1x1)[0], tiles).status)

print(render_ascii(region, tiles, built))
