# %% [markdown]
# Strong transitivity on a handful of small graphs.
#
# A partition V_1..V_k is strong transitive when every vertex in V_j has, for
# each i < j, a neighbour in V_i whose degree is at least its own.

# %%
from strong_transitivity import VertexPartition, verify_strong_transitive, verify_transitive
from strong_transitivity.generators import gen_complete_bipartite, gen_cycle, gen_path
from strong_transitivity.oracle import brute_st_numbers, brute_tr, brute_tr_st

p3 = gen_path(3)  # a - b - c as 0 - 1 - 2
ends_up = VertexPartition.from_classes([[1, 2], [0]])
middle_up = VertexPartition.from_classes([[0, 2], [1]])

for name, part in [("end vertex raised", ends_up), ("centre raised", middle_up)]:
    strong = verify_strong_transitive(p3, part)
    plain = verify_transitive(p3, part)
    print(f"{name:18s} strong={strong.valid!s:5s} plain={plain.valid}")
    if not strong.valid:
        print("   ", strong.violation.describe())

# %% [markdown]
# The centre has degree 2, so its only possible dominators (the ends, degree 1)
# are too small.  Per-vertex numbers make that visible.

# %%
print("st on P3:", brute_st_numbers(p3))

# %%
for name, g in [("C4", gen_cycle(4)), ("K3,2", gen_complete_bipartite(3, 2))]:
    k, witness = brute_tr_st(g)
    print(f"{name}: Tr_st = {k}, Tr = {brute_tr(g)}, witness {witness.as_lists()}")

# %% [markdown]
# K_{m,m-1}: plain transitivity grows with m, strong transitivity stays at 2.

# %%
for m in (2, 3, 4, 5):
    g = gen_complete_bipartite(m, m - 1)
    print(f"m={m}: Tr_st={brute_tr_st(g)[0]}  Tr={brute_tr(g)}")
