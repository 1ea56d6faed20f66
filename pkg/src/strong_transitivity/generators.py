"""Deterministic graph families and seeded random instances."""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from .graph import Graph, GraphError, build_graph


def _need(n: int, low: int, name: str) -> None:
    if n < low:
        raise GraphError(f"{name} needs at least {low} vertices, got {n}")


def gen_path(n: int) -> Graph:
    _need(n, 1, "path")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    _need(n, 3, "cycle")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_complete(n: int) -> Graph:
    _need(n, 1, "complete graph")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def gen_complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: vertices ``0..a-1`` form the first side, ``a..a+b-1`` the second."""
    _need(a, 1, "bipartite side")
    _need(b, 1, "bipartite side")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def gen_star(n: int) -> Graph:
    """Star on ``n`` vertices with centre 0 (so ``gen_star(5)`` is K_{1,4})."""
    _need(n, 1, "star")
    return build_graph(n, [(0, i) for i in range(1, n)])


def gen_spider(legs: Sequence[int]) -> Graph:
    """Centre 0 with one path of each given length hanging off it."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(nxt, edges)


def prufer_to_edges(seq: Sequence[int], n: int) -> np.ndarray:
    """Linear-time Prüfer decoding into an ``(n-1, 2)`` edge array."""
    seq = [int(x) for x in seq]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = np.empty((max(n - 1, 0), 2), dtype=np.int64)
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for i, x in enumerate(seq):
        edges[i, 0] = leaf
        edges[i, 1] = x
        degree[x] -= 1
        if x < ptr and degree[x] == 1:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    if n >= 2:
        edges[n - 2, 0] = leaf
        edges[n - 2, 1] = n - 1
    return edges


def gen_random_tree(n: int, seed: int = 0) -> Graph:
    """Uniform labelled tree via a random Prüfer sequence."""
    _need(n, 1, "tree")
    if n == 1:
        return build_graph(1, [])
    rng = np.random.default_rng(seed)
    seq = rng.integers(0, n, size=n - 2)
    return build_graph(n, prufer_to_edges(seq, n))


def gen_random_split(
    n: int, seed: int = 0, clique_size: Optional[int] = None, p: float = 0.5
) -> Graph:
    """Random split graph: clique on a random vertex subset, the rest independent.

    Each independent vertex is joined to each clique vertex with probability
    ``p``.  Vertex labels are shuffled so the clique is not a prefix.
    """
    _need(n, 1, "split graph")
    rng = np.random.default_rng(seed)
    t = int(rng.integers(1, n + 1)) if clique_size is None else int(clique_size)
    if not 1 <= t <= n:
        raise GraphError(f"clique size {t} outside 1..{n}")
    label = rng.permutation(n)
    ki, kj = np.triu_indices(t, 1)
    clique_edges = np.column_stack([label[ki], label[kj]])
    cross = rng.random((n - t, t)) < p
    si, ci = np.nonzero(cross)
    cross_edges = np.column_stack([label[t + si], label[ci]])
    return build_graph(n, np.concatenate([clique_edges, cross_edges]).reshape(-1, 2))


def gen_random_graph(n: int, p: float, seed: int = 0) -> Graph:
    """Erdős–Rényi G(n, p)."""
    _need(n, 1, "random graph")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability {p} outside [0, 1]")
    rng = np.random.default_rng(seed)
    i, j = np.triu_indices(n, 1)
    keep = rng.random(i.shape[0]) < p
    return build_graph(n, np.column_stack([i[keep], j[keep]]))


def gen_random_connected_graph(n: int, p: float, seed: int = 0, max_tries: int = 1000) -> Graph:
    """G(n, p) conditioned on connectivity by rejection (falls back to adding a spanning path)."""
    from .graph import is_connected

    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        g = gen_random_graph(n, p, int(rng.integers(2**63 - 1)))
        if is_connected(g):
            return g
    return build_graph(n, g.edges() + [(i, i + 1) for i in range(n - 1)])
