"""Exact brute-force values for small graphs.

These routines are deliberately independent of the tree and split solvers
and serve as ground truth for them.

The search rests on two facts about (strong) transitive partitions:

* A vertex placed in ``V_1`` imposes no obligation, so any partial
  assignment can be completed by sending every unassigned vertex to ``V_1``.
* A vertex in ``V_j`` needs a qualified neighbour in each of
  ``V_1, ..., V_{j-1}``; in particular, a nonempty top class forces every
  lower class to be nonempty.

So "is there a partition with ``v`` in ``V_p``?" becomes a demand-driven
search: start from ``label(v) = p``, repeatedly pick an unmet demand
``(y, i)`` and branch over the unassigned qualified neighbours of ``y`` that
could be put in ``V_i``.  Every valid partition with ``v`` in ``V_p`` can be
thinned to one whose raised vertices are all needed, and the search reaches
each such thinned partition, so it is complete.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .graph import Graph, GraphError, require_connected
from .partition import VertexPartition

ORACLE_LIMIT = 14


class OracleLimitError(GraphError):
    def __init__(self, n: int, limit: int):
        self.n, self.limit = n, limit
        super().__init__(f"graph has {n} vertices; the exact oracle is limited to {limit}")


def _check_size(g: Graph, limit: int) -> None:
    if g.n > limit:
        raise OracleLimitError(g.n, limit)


def _qualified(g: Graph, strong: bool, degrees: Optional[Sequence[int]] = None) -> list[tuple[int, ...]]:
    deg = list(g.degrees.tolist() if degrees is None else degrees)
    if not strong:
        return list(g.adjacency)
    return [tuple(x for x in row if deg[x] >= deg[y]) for y, row in enumerate(g.adjacency)]


def _place(qual: list[tuple[int, ...]], n: int, v: int, p: int) -> Optional[list[int]]:
    """Labels (0 = not raised, i.e. ``V_1``) with ``label[v] == p``, or None."""
    if p - 1 > len(qual[v]):
        return None
    label = [0] * n
    label[v] = p
    raised = [v]

    def pick():
        # Returns None when all demands are met, False when some vertex is stuck,
        # else (free neighbours, class) for the tightest demand.
        best = None
        for y in raised:
            ly = label[y]
            if ly < 2:
                continue
            present = set()
            free = []
            for x in qual[y]:
                lx = label[x]
                if lx == 0:
                    free.append(x)
                elif lx < ly:
                    present.add(lx)
            missing = [i for i in range(2, ly) if i not in present]
            if len(missing) + 1 > len(free):
                return False
            if missing and (best is None or len(free) < len(best[0])):
                best = (free, missing[-1])
        return best

    def search() -> bool:
        demand = pick()
        if demand is None:
            return True
        if demand is False:
            return False
        free, i = demand
        for u in free:
            label[u] = i
            raised.append(u)
            if search():
                return True
            raised.pop()
            label[u] = 0
        return False

    return label if search() else None


def _to_partition(label: list[int]) -> VertexPartition:
    return VertexPartition.from_labels([max(c, 1) for c in label])


def _st_numbers(g: Graph, strong: bool) -> list[int]:
    qual = _qualified(g, strong)
    out = []
    for v in range(g.n):
        p = len(qual[v]) + 1
        while p > 1 and _place(qual, g.n, v, p) is None:
            p -= 1
        out.append(p)
    return out


def brute_st_number(g: Graph, v: int, limit: int = ORACLE_LIMIT, degrees: Optional[Sequence[int]] = None) -> int:
    """Largest class index ``v`` can occupy in any strong transitive partition.

    ``degrees`` overrides the degrees used by the domination test, e.g. to
    evaluate a pruned subtree with the degrees of the tree it came from.
    """
    _check_size(g, limit)
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    if degrees is not None and len(degrees) != g.n:
        raise ValueError(f"{len(degrees)} degrees given for {g.n} vertices")
    qual = _qualified(g, True, degrees)
    p = len(qual[v]) + 1
    while p > 1 and _place(qual, g.n, v, p) is None:
        p -= 1
    return p


def brute_st_numbers(g: Graph, limit: int = ORACLE_LIMIT, strong: bool = True) -> list[int]:
    _check_size(g, limit)
    return _st_numbers(g, strong)


def _best_partition(g: Graph, strong: bool, limit: int) -> tuple[int, VertexPartition]:
    _check_size(g, limit)
    require_connected(g)
    qual = _qualified(g, strong)
    top = max(len(q) for q in qual) + 1
    order = sorted(range(g.n), key=lambda v: (-len(qual[v]), v))
    # size-k existence implies size-(k-1) existence (merge V_1 into V_2), so scan down
    for k in range(top, 0, -1):
        for v in order:
            if len(qual[v]) + 1 < k:
                break
            label = _place(qual, g.n, v, k)
            if label is not None:
                return k, _to_partition(label)
    raise AssertionError("unreachable: k = 1 is always feasible")


def brute_tr_st(g: Graph, limit: int = ORACLE_LIMIT) -> tuple[int, VertexPartition]:
    """Exact strong transitivity with a witness partition of that size."""
    return _best_partition(g, True, limit)


def brute_tr(g: Graph, limit: int = ORACLE_LIMIT) -> int:
    """Exact (ordinary) transitivity."""
    return _best_partition(g, False, limit)[0]


def brute_tr_witness(g: Graph, limit: int = ORACLE_LIMIT) -> tuple[int, VertexPartition]:
    return _best_partition(g, False, limit)


def brute_3coloring(g: Graph, limit: int = 64) -> Optional[list[int]]:
    """A proper colouring into ``{1, 2, 3}`` (list indexed by vertex) or None."""
    _check_size(g, limit)
    adj = g.adjacency
    order = sorted(range(g.n), key=lambda v: (-len(adj[v]), v))
    color = [0] * g.n

    def extend(pos: int) -> bool:
        if pos == g.n:
            return True
        v = order[pos]
        used = {color[u] for u in adj[v]}
        for c in (1, 2, 3):
            if c not in used:
                color[v] = c
                if extend(pos + 1):
                    return True
        color[v] = 0
        return False

    return color if extend(0) else None


def max_clique_size(g: Graph, limit: int = 40) -> int:
    """Brute-force clique number (Bron–Kerbosch with pivoting)."""
    _check_size(g, limit)
    adj = g.neighbor_sets
    best = 0

    def expand(r: int, p: set, x: set) -> None:
        nonlocal best
        if not p and not x:
            best = max(best, r)
            return
        if r + len(p) <= best:
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in list(p - adj[pivot]):
            expand(r + 1, p & adj[v], x & adj[v])
            p.discard(v)
            x.add(v)

    expand(0, set(range(g.n)), set())
    return best
