"""Checking (strong) transitive partitions.

``V_i`` *strongly dominates* ``V_j`` when every ``y`` in ``V_j`` has a
neighbour ``x`` in ``V_i`` with ``deg(x) >= deg(y)``.  A partition is strong
transitive when this holds for every pair ``i < j``; dropping the degree
condition gives the ordinary transitive partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .graph import Graph
from .partition import PartitionError, VertexPartition


@dataclass(frozen=True)
class Violation:
    i: int  # dominating class (1-based)
    j: int  # dominated class (1-based)
    y: int  # vertex of V_j left without a dominator in V_i

    def describe(self, strong: bool = True) -> str:
        verb = "strongly dominate" if strong else "dominate"
        return f"class {self.i} fails to {verb} vertex {self.y} in class {self.j}"


@dataclass(frozen=True)
class Verdict:
    valid: bool
    violation: Optional[Violation] = None

    def __bool__(self) -> bool:
        return self.valid


def strongly_dominates(g: Graph, a: Iterable[int], b: Iterable[int]) -> bool:
    a, b = set(a), set(b)
    if a & b:
        raise ValueError(f"sets overlap on vertex {min(a & b)}")
    deg = g.degrees
    adj = g.adjacency
    return all(any(x in a and deg[x] >= deg[y] for x in adj[y]) for y in b)


def dominates(g: Graph, a: Iterable[int], b: Iterable[int]) -> bool:
    a, b = set(a), set(b)
    if a & b:
        raise ValueError(f"sets overlap on vertex {min(a & b)}")
    adj = g.adjacency
    return all(any(x in a for x in adj[y]) for y in b)


def _check_structure(g: Graph, partition: VertexPartition) -> np.ndarray:
    # re-validates against this graph; raises PartitionError on defects
    VertexPartition.from_classes(partition.classes, g.n)
    return partition.labels()


def _verify(g: Graph, partition: VertexPartition, strong: bool) -> Verdict:
    labels = _check_structure(g, partition)
    k = partition.k
    if k == 1:
        return Verdict(True)
    deg = g.degrees
    src = np.repeat(np.arange(g.n), deg)  # dominated vertex y
    dst = g.indices  # candidate dominator x
    ok = labels[dst] < labels[src]
    if strong:
        ok &= deg[dst] >= deg[src]
    pairs = np.unique(src[ok] * (k + 1) + labels[dst[ok]])
    covered = np.bincount(pairs // (k + 1), minlength=g.n)
    bad = np.flatnonzero(covered < labels - 1)
    if bad.size == 0:
        return Verdict(True)
    best = None
    adj = g.adjacency
    for y in bad.tolist():
        have = {int(labels[x]) for x in adj[y] if labels[x] < labels[y] and (not strong or deg[x] >= deg[y])}
        i = next(c for c in range(1, int(labels[y])) if c not in have)
        cand = (i, int(labels[y]), y)
        if best is None or cand < best:
            best = cand
    return Verdict(False, Violation(*best))


def verify_strong_transitive(g: Graph, partition: VertexPartition) -> Verdict:
    """Check every strong-domination obligation ``V_i -> V_j`` for ``i < j``.

    Returns a :class:`Verdict`; on failure the violation is the
    lexicographically smallest ``(i, j, y)``.  Structural defects (empty
    class, overlap, missing vertex) raise :class:`PartitionError` instead.
    """
    return _verify(g, partition, strong=True)


def verify_transitive(g: Graph, partition: VertexPartition) -> Verdict:
    """Same as :func:`verify_strong_transitive` without the degree condition."""
    return _verify(g, partition, strong=False)


__all__ = [
    "PartitionError",
    "Verdict",
    "Violation",
    "dominates",
    "strongly_dominates",
    "verify_strong_transitive",
    "verify_transitive",
]
