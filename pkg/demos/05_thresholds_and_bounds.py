"""
Thresholds and cohomology bounds
================================
"""

# %%
from commvar import LieType, bound_table, threshold_check
from commvar.formulas import render_bound_table

for label, r in (("sp4", 2), ("sp4", 3), ("sl6", 3)):
    chk = threshold_check(LieType.parse(label), r)
    print(label, r, chk.u.threshold, chk.u.printed, chk.u.lhs, ">", chk.u.rhs)

# %%
# the printed nilpotent-cone threshold for sp_2m against the raw inequality
for r in range(2, 9):
    chk = threshold_check(LieType.parse("sp4"), r)
    print(r, float(chk.N.threshold), chk.N.printed, chk.N.derived)

# %%
print(render_bound_table(bound_table("A", 3, 2)))
