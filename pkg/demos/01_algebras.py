"""
Classical Lie algebras as matrices
==================================

Build sp4 and so7 from their bilinear forms, pick out the subalgebras we
care about and check the bracket closes.
"""

# %%
from commvar import LieType, construct_algebra, select_subalgebra
from commvar.lie import structure_check

g = construct_algebra(LieType.parse("sp4"))
print(g.lie_type, "dim", g.dim)

# %%
# u: strictly upper-triangular part (positive root vectors); w: the abelian block
for tag in ("b", "u", "w"):
    print(tag, select_subalgebra(g, tag).dim)

# %%
# bracket closure and invariance of the form, exact rational arithmetic throughout
print(structure_check(g))

# %%
for label in ("A3", "B3", "C3", "D4"):
    h = construct_algebra(LieType.parse(label))
    print(f"{h.lie_type.matrix_name:5s} dim g = {h.dim:3d}  dim w = {select_subalgebra(h, 'w').dim}")
