"""
Compiling a formula into a region
=================================

The formula (x1 x1 x3)(x2 x2 x3)(x1 x2 x3) asks for exactly one true literal
per clause.  Each variable sends three copies of its value rightward; adjacent
swaps reorder the rows to match the clause order, and a notch on the right
checks each clause.
"""

from wangtiling import Cm13Instance, build_region_w23, layout_signals
from wangtiling.core import is_simply_connected
from wangtiling.reduction import build_crossover_boundary
from wangtiling.render import render_ascii

phi = Cm13Instance(3, ((1, 1, 3), (2, 2, 3), (1, 2, 3)))
plan = layout_signals(phi)
print("height", plan.height)
print("source", " ".join(plan.source_rows))
print("target", " ".join(plan.target_rows))
print("swaps ", plan.swaps)

# any schedule that realizes the same permutation is accepted
by_hand = (8, 7, 6, 5, 4, 3, 4, 5, 6, 9, 8, 7, 9, 8)
print("hand-made schedule width:", sum(layout_signals(phi, by_hand).swaps))

# a crossover slice of width 8 in an 11-row region
print(build_crossover_boundary(8, 11, "w23"))
print(build_crossover_boundary(8, 11, "w29"))

region, plan = build_region_w23(phi)
print(len(region), "cells, central width", plan.central_width)
print("simply connected:", is_simply_connected(region))
print(render_ascii(region))
