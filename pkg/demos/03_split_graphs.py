# %% [markdown]
# Split graphs: the degree sequence alone decides splitness, and the strong
# transitivity equals the clique number.

# %%
from strong_transitivity import recognize_split, solve_split, verify_strong_transitive
from strong_transitivity.generators import gen_cycle, gen_random_split
from strong_transitivity.graph import build_graph
from strong_transitivity.oracle import brute_tr, brute_tr_st

print("C4 split?", recognize_split(gen_cycle(4)) is not None)

g = gen_random_split(9, seed=4, p=0.5)
d = recognize_split(g)
print("clique", sorted(d.clique), "independent", sorted(d.independent))
k, w = solve_split(g)
print("Tr_st =", k, "witness", w.as_lists(), "valid", verify_strong_transitive(g, w).valid)

# %% [markdown]
# When every clique vertex has a neighbour outside the clique, plain
# transitivity reaches omega + 1 but the degree condition blocks the extra class.

# %%
t = 4
edges = [(i, j) for i in range(t) for j in range(i + 1, t)] + [(i, t + i) for i in range(t)]
g = build_graph(2 * t, edges)
print(f"omega={t}  Tr_st={solve_split(g)[0]} (oracle {brute_tr_st(g)[0]})  Tr={brute_tr(g)}")
