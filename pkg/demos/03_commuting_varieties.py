"""
Commuting varieties as ideals
=============================

C_r(V) is the set of r-tuples in V that pairwise commute.  Compile it to a
polynomial ideal and ask for its dimension.
"""

# %%
from commvar import EngineConfig, Locus, LieType, compile_instance, dimension
from commvar.formulas import expected_dimension

t = LieType.parse("C2")
inst = compile_instance(Locus("u", t), 2)
print(inst.description, inst.nvars, "variables,", len(inst.generators), "generators")
print(inst.to_text()[:400])

# %%
sid, want = expected_dimension(inst.locus, 2)
report = dimension(inst, EngineConfig(char=32003), expected=want)
print(sid, report.dimension, report.verdict)

# %%
# in characteristic 2 one family of generators has even content and drops out
print(set(inst.contents))
print(dimension(inst, EngineConfig(char=2)).dimension)

# %%
for r in (1, 2, 3):
    i = compile_instance(Locus("u", LieType.parse("A2")), r)
    print(r, dimension(i).dimension)
