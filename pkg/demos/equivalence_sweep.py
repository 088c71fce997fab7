"""
Satisfiable exactly when tileable
=================================

A sweep over every small formula and a batch of random ones compares a
brute-force 1-in-3 check with the tiling solver on both tile sets.
"""

import io

from wangtiling.satcheck import enumerate_instances, random_instances, run_harness

small = [inst for n in (1, 2, 3) for inst in enumerate_instances(n)]
print(run_harness(small).line())

# only n divisible by 3 can be satisfiable (each true variable covers 3 clauses)
report = io.StringIO()
summary = run_harness(random_instances(12, [3, 6], seed=7), out=report)
print(summary.line())
print(report.getvalue().splitlines()[0])
