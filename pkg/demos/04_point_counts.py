"""
Dimension from point counts
===========================

#V(F_q) grows like q^dim V.  Counting over a few small fields and fitting a
line in log-log coordinates gives an independent estimate.
"""

# %%
from commvar import Locus, LieType, compile_instance, count_points, slope_fit

inst = compile_instance(Locus("N", LieType.parse("A1")), 2)
qs = (2, 3, 4, 5, 7, 8, 9)
counts = [count_points(inst, q).count for q in qs]
print(counts)
print([q**3 + q**2 - q for q in qs])

# %%
fit = slope_fit(qs, counts)
print(round(fit.slope, 3), fit.interval())

# %%
# sampling instead of enumerating, reproducible by seed
pc = count_points(inst, 11, mode="sample", samples=200_000, seed=1)
print(pc.count, "+/-", pc.stderr, "exact", 11**3 + 11**2 - 11)
