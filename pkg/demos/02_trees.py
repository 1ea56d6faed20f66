# %% [markdown]
# Trees: two linear passes give the strong transitive number of every vertex.

# %%
import time

import numpy as np

from strong_transitivity import solve_tree, tr_st_tree, verify_strong_transitive, witness_partition_tree
from strong_transitivity.generators import gen_path, gen_random_tree
from strong_transitivity.oracle import brute_st_numbers

# %%
for n in (3, 4, 5, 6, 10, 20):
    print(f"P{n}: Tr_st = {tr_st_tree(gen_path(n))[0]}")

# %% [markdown]
# A random 12-vertex tree rooted at 0.  The tables hold the subtree value
# (mstr), the final number (st) and the required flag of every vertex w.r.t.
# its parent.

# %%
g = gen_random_tree(12, 1)
print("edges  :", g.edges())
t = solve_tree(g)
print("vertex :", list(range(g.n)))
print("degree :", g.degrees.tolist())
print("mstr   :", t.mstr.tolist())
print("st     :", t.st.tolist())
print("oracle :", brute_st_numbers(g))
print("req    :", t.required.tolist())

# %%
best = int(np.argmax(t.st))
w = witness_partition_tree(g, best, int(t.st[best]))
print("witness:", w.as_lists(), "valid:", verify_strong_transitive(g, w).valid)

# %% [markdown]
# Scaling on random labelled trees (first call compiles the kernels).

# %%
tr_st_tree(gen_random_tree(100, 0))
for n in (2**16, 2**18, 2**20):
    g = gen_random_tree(n, 1)
    t0 = time.perf_counter()
    k, _ = tr_st_tree(g)
    dt = time.perf_counter() - t0
    print(f"n={n:8d}  Tr_st={k}  {dt:.3f}s  {n / dt / 1e6:.2f} M vertices/s")
