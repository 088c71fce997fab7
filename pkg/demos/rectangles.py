"""
From Wang tiles to rectangles
=============================

Every color gets a label k, encoded as a small bump 5**k on a huge unit M.
Each tile then yields five rectangles (one wide, four small), and three fixed
rectangles are shared by all tiles.  Many of them coincide; 111 sizes remain.
"""

from wangtiling import build_rectangles, build_w29, count_table
from wangtiling.formats import rectangles_to_json

w29 = build_w29()
rects = build_rectangles(w29)
print("unit M =", rects.unit)
print("distinct sizes:", len(rects))  # 111

# distinct sizes credited to the first kind of tile that produces them
table = count_table(rects, w29)
for family in ("w", "s1", "s2", "s3", "s4"):
    print(family, table[family])
print("column totals", table["total"])
print("fixed", table["fixed"])

# the JSON listing written by `wangtiling tileset --variant rect`
print(rectangles_to_json(rects)[:200], "...")
