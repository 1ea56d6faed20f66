# %% [markdown]
# The hardness reduction: a 3-colouring instance G becomes a chordal graph G'
# with target k = m + 4.

# %%
from collections import Counter

from strong_transitivity import coloring_to_partition, partition_to_coloring, reduce_3col_to_mstdp, verify_strong_transitive
from strong_transitivity.generators import gen_complete
from strong_transitivity.graph import is_chordal
from strong_transitivity.oracle import brute_3coloring
from strong_transitivity.sat import dpll_solve, encode_tr_st_sat

k3 = gen_complete(3)
inst = reduce_3col_to_mstdp(k3)
print(f"G' has {inst.gprime.n} vertices, {inst.gprime.m} edges, k = {inst.k}, chordal = {is_chordal(inst.gprime)[0]}")
print(Counter(p.tag for p in inst.provenance))

# %% [markdown]
# A proper colouring gives a partition with m + 4 classes, and the original
# vertices' classes read the colouring back.

# %%
coloring = brute_3coloring(k3)
part = coloring_to_partition(k3, coloring, inst)
print("classes:", part.k, "valid:", verify_strong_transitive(inst.gprime, part).valid)
print("colouring", coloring, "->", partition_to_coloring(part, inst))

# %% [markdown]
# K4 has no 3-colouring, so G' should have no partition of size 10.  The
# plain DPLL cannot settle that within a modest budget.

# %%
k4 = reduce_3col_to_mstdp(gen_complete(4))
f = encode_tr_st_sat(k4.gprime, k4.k)
print(f"K4 instance: {f.variable_count} variables, {len(f.clauses)} clauses")
print(dpll_solve(f, budget=20_000).status)
