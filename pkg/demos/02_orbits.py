"""
Nilpotent orbits by partition
=============================
"""

# %%
from commvar import LieType, Partition, construct_algebra, centralizer_dim, orbit_dim
from commvar.orbits import partition_representative, square_zero_max_orbit, valid_partitions

t = LieType.parse("so8")
labels = valid_partitions(t)
print(len(labels), "labels")

# %%
# closed-form orbit dimension against dim g minus the centralizer of a representative
g = construct_algebra(t)
for part in labels:
    x = partition_representative(t, part)
    print(f"{str(part):14s} {orbit_dim(t, part):3d} {g.dim - centralizer_dim(g, x):3d}")

# %%
# largest square-zero orbit in sl_n
for n in range(2, 7):
    s = LieType("A", n - 1)
    print(s.matrix_name, square_zero_max_orbit(s).partition, square_zero_max_orbit(s).dim)
