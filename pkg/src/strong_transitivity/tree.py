"""Linear-time strong transitivity of trees.

Two passes over a BFS order:

* bottom-up: the modified rooted number of every vertex, i.e. the highest
  class it can reach inside its own subtree;
* top-down (rerooting): for each child ``x`` of ``y`` the parent's value
  seen from ``x`` is ``st(y)`` or ``st(y) - 1`` depending on whether ``x``
  is *required* by ``y``; combining it with the children's values gives
  ``st(x)``.

A neighbour ``u`` can strongly dominate ``x`` iff ``deg(u) >= deg(x)`` in the
whole tree, so every comparison uses whole-tree degrees.  The tree's
strong transitivity is the largest ``st``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

import numpy as np

from . import _tree_kernels as kernels
from .graph import Graph, GraphError
from .partition import VertexPartition


class NotATreeError(GraphError):
    pass


@dataclass(frozen=True)
class QualifiedValueList:
    """Values of the neighbours able to strongly dominate a focus vertex, ascending."""

    values: tuple[int, ...]
    owners: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)


@dataclass
class TreeTables:
    root: int
    order: np.ndarray  # reverse BFS: leaves first, root last
    parent: np.ndarray
    mstr: np.ndarray
    st: np.ndarray
    required: np.ndarray
    parent_value: Optional[np.ndarray] = None

    @property
    def tr_st(self) -> int:
        return int(self.st.max())


def _require_tree(g: Graph) -> None:
    # connectivity is checked by the BFS in _Rooted; with n - 1 edges it implies a tree
    if g.n == 0:
        raise NotATreeError("empty graph")
    if g.m != g.n - 1:
        kind = "a forest or disconnected" if g.m < g.n - 1 else "not a tree"
        raise NotATreeError(f"input is {kind} ({g.n} vertices, {g.m} edges)")


def qualified_values(g: Graph, x: int, neighbor_values: Mapping[int, int]) -> QualifiedValueList:
    """Keep neighbours ``u`` of ``x`` with ``deg(u) >= deg(x)``, sorted by (value, id).

    Only neighbours present in ``neighbor_values`` are considered, so a
    caller can pass just the children of ``x``.
    """
    deg = g.degrees
    pairs = sorted(
        (int(val), int(u)) for u, val in neighbor_values.items() if g.has_edge(x, u) and deg[u] >= deg[x]
    )
    return QualifiedValueList(tuple(v for v, _ in pairs), tuple(u for _, u in pairs))


def strong_transitive_number(q: QualifiedValueList | Sequence[int]) -> int:
    """``1 + z`` for the longest ascending chain with the ``p``-th value ``>= p``."""
    values = q.values if isinstance(q, QualifiedValueList) else tuple(q)
    if any(b < a for a, b in zip(values, values[1:])):
        raise ValueError("values must be ascending")
    return int(kernels.greedy_count(np.asarray(values, dtype=np.int64), len(values)))


def mark_required(z: int, q: QualifiedValueList | Sequence[int]) -> list[int]:
    """Flag, per qualified entry, whether removing it lowers the chain count to ``z - 1``."""
    values = q.values if isinstance(q, QualifiedValueList) else tuple(q)
    if z - 1 > len(values) or z < 1:
        raise ValueError(f"chain count {z} impossible for {len(values)} qualified neighbours")
    flags = np.zeros(max(len(values), 1), dtype=np.int64)
    kernels.mark_flags(z, np.asarray(values, dtype=np.int64), len(values), flags)
    return flags[: len(values)].tolist()


class _Rooted:
    """The tree relabelled in BFS order from ``root`` (see ``bfs_relabel``)."""

    def __init__(self, g: Graph, root: int):
        if not 0 <= root < g.n:
            raise GraphError(f"root {root} outside 0..{g.n - 1}")
        reached, self.order, self.parent, self.indptr, self.indices, self.deg, self.local_parent = (
            kernels.bfs_relabel(g.indptr, g.indices, g.degrees, root)
        )
        if reached != g.n:
            raise NotATreeError(f"input is disconnected (only {reached} of {g.n} vertices reachable from {root})")
        self.local_order = np.arange(g.n, dtype=np.int64)

    def to_global(self, values: np.ndarray) -> np.ndarray:
        out = np.empty_like(values)
        out[self.order] = values
        return out

    def mstr(self) -> np.ndarray:
        return kernels.bottom_up_kernel(self.indptr, self.indices, self.deg, self.local_order, self.local_parent)


def bottom_up(g: Graph, root: int = 0) -> TreeTables:
    """Fill ``mstr`` for every vertex of the tree rooted at ``root``; ``st[root]`` too."""
    _require_tree(g)
    r = _Rooted(g, root)
    mstr = r.to_global(r.mstr())
    st = np.zeros(g.n, dtype=np.int64)
    st[root] = mstr[root]
    return TreeTables(root, r.order[::-1].copy(), r.parent, mstr, st, np.zeros(g.n, dtype=np.int64))


def top_down(g: Graph, root: int, tables: TreeTables) -> TreeTables:
    """Complete ``st`` and ``required`` for all vertices from bottom-up tables."""
    r = _Rooted(g, root)
    st, required, parent_value = kernels.top_down_kernel(
        r.indptr, r.indices, r.deg, r.local_order, r.local_parent, tables.mstr[r.order]
    )
    tables.st, tables.required, tables.parent_value = r.to_global(st), r.to_global(required), r.to_global(parent_value)
    assert tables.st[root] == tables.mstr[root]
    return tables


def _solve(g: Graph, root: int) -> TreeTables:
    # both passes on one relabelled copy
    r = _Rooted(g, root)
    mstr_local = r.mstr()
    st, required, parent_value = kernels.top_down_kernel(
        r.indptr, r.indices, r.deg, r.local_order, r.local_parent, mstr_local
    )
    return TreeTables(
        root, r.order[::-1].copy(), r.parent, r.to_global(mstr_local), r.to_global(st),
        r.to_global(required), r.to_global(parent_value),
    )


def solve_tree(g: Graph, root: int = 0) -> TreeTables:
    _require_tree(g)
    return _solve(g, root)


def st_numbers(g: Graph) -> np.ndarray:
    """Strong transitive number of every vertex."""
    return solve_tree(g).st


def witness_partition_tree(g: Graph, v: int, target: int, mstr: Optional[np.ndarray] = None) -> VertexPartition:
    """A strong transitive partition with ``v`` in ``V_target`` and exactly ``target`` classes.

    Each raised vertex takes the ascending greedy chain of its qualified
    children (ties by id) to realise classes ``1..c-1``; everything else
    lands in ``V_1``.  ``mstr`` may carry precomputed values rooted at ``v``.
    """
    _require_tree(g)
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    return _witness(g, v, target, mstr)


def _witness(g: Graph, v: int, target: int, mstr: Optional[np.ndarray]) -> VertexPartition:
    r = _Rooted(g, v)
    if mstr is None:
        mstr = r.to_global(r.mstr())
    if target < 1 or target > mstr[v]:
        raise ValueError(f"vertex {v} cannot reach class {target} (its strong transitive number is {mstr[v]})")
    deg = g.degrees
    labels = np.ones(g.n, dtype=np.int64)
    stack = [(v, target)]
    while stack:
        x, c = stack.pop()
        labels[x] = c
        if c == 1:
            continue
        kids = sorted(
            (int(mstr[u]), int(u)) for u in g.neighbors(x) if u != r.parent[x] and deg[u] >= deg[x]
        )
        cur = 1
        for val, u in kids:
            if cur == c:
                break
            if val >= cur:
                stack.append((u, cur))
                cur += 1
        assert cur == c, "chain shorter than the modified rooted number promised"
    return VertexPartition.from_labels(labels)


def tr_st_tree(g: Graph) -> tuple[int, VertexPartition]:
    """Strong transitivity of a tree with a witness partition of that size."""
    tables = solve_tree(g)
    best = int(np.argmax(tables.st))
    k = int(tables.st[best])
    return k, _witness(g, best, k, None)
