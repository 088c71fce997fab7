"""
The two fixed tile sets
=======================

Generalized tiles are small polyominoes with colored outer edges.  Cutting
them into unit squares, with a fresh glue color on every internal cut, gives
ordinary Wang tiles that can only reassemble into the original shapes.
"""

from wangtiling import build_w23, build_w29
from wangtiling.core import is_glue

w23 = build_w23()
print(len(w23), "tiles in", len(w23.groups()), "groups")  # 23 tiles in 14 groups

# each group lists its unit tiles with their offset inside the polyomino
for name, members in w23.groups().items():
    print(f"{name:>4}: " + ", ".join(f"{t.offset}" for t in members))

# the base alphabet, without glue colors; "0p" is the clause-only zero
print(sorted(c for c in w23.alphabet if not is_glue(c)))

# the second set alternates signals and vertical colors, so no tile has the
# same color on two parallel sides
w29 = build_w29()
print(len(w29), "tiles in", len(w29.groups()), "groups")
print(all(t.north != t.south and t.west != t.east for t in w29))

# the 2x2 crossovers keep one internal cut colored l instead of a glue color
for t in w29.groups()["X01"]:
    print(t.offset, t.colors)
