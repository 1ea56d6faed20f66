"""Simple undirected graphs stored in compressed sparse row form.

Every solver in the package consumes :class:`Graph`.  Vertices are the
integers ``0..n-1``; each adjacency row is sorted by vertex id, so
iteration order (and therefore every derived result) is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order


class GraphError(ValueError):
    """Raised for malformed graphs or inputs a routine cannot handle."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph.

    ``indices[indptr[v]:indptr[v+1]]`` lists the neighbours of ``v`` in
    ascending order and ``degrees[v]`` is the length of that row.
    """

    n: int
    indptr: np.ndarray
    indices: np.ndarray
    degrees: np.ndarray

    @property
    def m(self) -> int:
        return int(self.indices.shape[0] // 2)

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.n else 0

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.degrees[v])

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex sorted neighbour tuples (plain ints, handy for small graphs)."""
        ind = self.indices.tolist()
        ptr = self.indptr.tolist()
        return tuple(tuple(ind[ptr[v]:ptr[v + 1]]) for v in range(self.n))

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(row) for row in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = np.searchsorted(row, v)
        return bool(i < row.shape[0] and row[i] == v)

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with ``u < v``, sorted lexicographically."""
        src = np.repeat(np.arange(self.n), self.degrees)
        keep = src < self.indices
        return list(zip(src[keep].tolist(), self.indices[keep].tolist()))

    def to_csr(self) -> csr_matrix:
        return self._csr

    @cached_property
    def _csr(self) -> csr_matrix:
        data = np.ones(self.indices.shape[0], dtype=np.int8)
        return csr_matrix((data, self.indices, self.indptr), shape=(self.n, self.n))

    def audit(self) -> None:
        """Check symmetry, sortedness, loop-freeness and the degree cache."""
        if self.indptr.shape[0] != self.n + 1:
            raise GraphError("indptr length does not match n")
        if not np.array_equal(np.diff(self.indptr), self.degrees):
            raise GraphError("degree cache inconsistent with adjacency rows")
        for v in range(self.n):
            row = self.neighbors(v)
            if row.size and (row.min() < 0 or row.max() >= self.n):
                raise GraphError(f"vertex {v} has an out-of-range neighbour")
            if np.any(np.diff(row) <= 0):
                raise GraphError(f"adjacency row of {v} not strictly increasing")
            if np.any(row == v):
                raise GraphError(f"self-loop at {v}")
        a = self.to_csr()
        if (a != a.T).nnz:
            raise GraphError("adjacency is not symmetric")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a :class:`Graph` on ``n`` vertices from unordered pairs.

    Duplicate pairs (in either orientation) collapse to one edge.  An
    endpoint outside ``0..n-1`` or a self-loop raises :class:`GraphError`
    naming the offending pair.
    """
    n = int(n)
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    arr = edges if isinstance(edges, np.ndarray) else np.asarray(list(edges), dtype=np.int64)
    arr = arr.reshape(-1, 2).astype(np.int64, copy=False)
    u, v = arr[:, 0], arr[:, 1]
    bad = (u < 0) | (u >= n) | (v < 0) | (v >= n)
    if bad.any():
        i = int(np.argmax(bad))
        raise GraphError(f"edge ({int(u[i])}, {int(v[i])}) has an endpoint outside 0..{n - 1}")
    loops = u == v
    if loops.any():
        i = int(np.argmax(loops))
        raise GraphError(f"edge ({int(u[i])}, {int(v[i])}) is a self-loop")
    lo = np.minimum(u, v)
    hi = np.maximum(u, v)
    key = np.unique(lo * n + hi)
    lo, hi = np.divmod(key, max(n, 1))
    src = np.concatenate([lo, hi])
    dst = np.concatenate([hi, lo])
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    degrees = np.bincount(src, minlength=n).astype(np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(degrees, out=indptr[1:])
    return Graph(n, indptr, dst.astype(np.int64), degrees)


def from_adjacency(adj: list[list[int]]) -> Graph:
    return build_graph(len(adj), [(u, v) for u, row in enumerate(adj) for v in row])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices``; returns it with the new->old id map."""
    keep = sorted(set(int(v) for v in vertices))
    new_id = {v: i for i, v in enumerate(keep)}
    edges = [(new_id[u], new_id[w]) for u, w in g.edges() if u in new_id and w in new_id]
    return build_graph(len(keep), edges), keep


# -- traversals ---------------------------------------------------------------


@dataclass(frozen=True)
class BfsOrdering:
    order: np.ndarray
    parent: np.ndarray  # -1 at the root
    rank: np.ndarray

    @property
    def root(self) -> int:
        return int(self.order[0])


def bfs_ordering(g: Graph, root: int = 0) -> BfsOrdering:
    """Breadth-first order from ``root`` with parent pointers.

    Reversing ``order`` gives the bottom-up processing sequence used by the
    tree solver.  Raises :class:`GraphError` if some vertex is unreachable.
    """
    if not 0 <= root < g.n:
        raise GraphError(f"root {root} outside 0..{g.n - 1}")
    order, pred = breadth_first_order(g.to_csr(), root, directed=True, return_predecessors=True)
    if order.shape[0] != g.n:
        seen = np.zeros(g.n, dtype=bool)
        seen[order] = True
        missing = int(np.flatnonzero(~seen)[0])
        raise GraphError(f"graph is disconnected: vertex {missing} unreachable from {root}")
    order = order.astype(np.int64)
    parent = pred.astype(np.int64)
    parent[root] = -1
    rank = np.empty(g.n, dtype=np.int64)
    rank[order] = np.arange(g.n)
    return BfsOrdering(order, parent, rank)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    # rows are symmetric, so one directed BFS sees the whole component
    # (the undirected mode would first build A + A^T)
    reached = breadth_first_order(g.to_csr(), 0, directed=True, return_predecessors=False)
    return reached.shape[0] == g.n


def require_connected(g: Graph) -> None:
    if g.n == 0:
        raise GraphError("empty graph")
    if not is_connected(g):
        bfs_ordering(g, 0)  # raises, naming an unreachable vertex


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


class _Cell:
    __slots__ = ("members", "prev", "next", "split")

    def __init__(self):
        self.members: dict[int, None] = {}
        self.prev = self.next = self.split = None


def lex_bfs(g: Graph) -> list[int]:
    """Lexicographic breadth-first search, linear time by partition refinement.

    Cells form a linked list; visiting ``v`` moves each unvisited neighbour
    to a fresh cell placed just before its current one.  Within a cell,
    vertices leave in insertion order, so the result is deterministic.
    """
    if g.n == 0:
        return []
    head = _Cell()
    head.members = dict.fromkeys(range(g.n))
    cell_of = [head] * g.n
    visited = [False] * g.n
    out: list[int] = []
    adj = g.adjacency
    while head is not None:
        v = next(iter(head.members))
        del head.members[v]
        visited[v] = True
        out.append(v)
        if not head.members:
            head = head.next
            if head is not None:
                head.prev = None
        touched = []
        for w in adj[v]:
            if visited[w]:
                continue
            old = cell_of[w]
            new = old.split
            if new is None:
                new = _Cell()
                new.next, new.prev = old, old.prev
                if old.prev is not None:
                    old.prev.next = new
                else:
                    head = new
                old.prev = new
                old.split = new
                touched.append(old)
            del old.members[w]
            new.members[w] = None
            cell_of[w] = new
        for old in touched:
            old.split = None
            if not old.members:
                if old.prev is not None:
                    old.prev.next = old.next
                else:
                    head = old.next
                if old.next is not None:
                    old.next.prev = old.prev
    return out


def is_perfect_elimination_ordering(g: Graph, peo: list[int]) -> bool:
    pos = {v: i for i, v in enumerate(peo)}
    adj = g.neighbor_sets
    for v in peo:
        later = [w for w in adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        u = min(later, key=pos.__getitem__)
        if any(w != u and w not in adj[u] for w in later):
            return False
    return True


def is_chordal(g: Graph) -> tuple[bool, Optional[list[int]]]:
    """Chordality test; returns ``(True, peo)`` or ``(False, None)``.

    The reverse of a lex-BFS order is a perfect elimination ordering exactly
    when the graph is chordal.
    """
    peo = lex_bfs(g)[::-1]
    if is_perfect_elimination_ordering(g, peo):
        return True, peo
    return False, None
