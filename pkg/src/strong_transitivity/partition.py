"""Ordered vertex partitions ``V_1, ..., V_k``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np


class PartitionError(ValueError):
    """Structural defect: empty class, repeated vertex, or incomplete cover."""


@dataclass(frozen=True)
class VertexPartition:
    """Classes are stored 0-indexed; class ``classes[i]`` is ``V_{i+1}``."""

    classes: tuple[frozenset, ...]

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.classes)

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[int]], n: Optional[int] = None) -> "VertexPartition":
        """Validate and freeze.  With ``n`` given the union must be exactly ``0..n-1``."""
        frozen = []
        seen: dict[int, int] = {}
        for idx, members in enumerate(classes, 1):
            members = [int(v) for v in members]
            if not members:
                raise PartitionError(f"class {idx} is empty")
            for v in members:
                if v in seen:
                    where = "twice in" if seen[v] == idx else f"in classes {seen[v]} and"
                    raise PartitionError(f"vertex {v} appears {where} class {idx}")
                seen[v] = idx
            frozen.append(frozenset(members))
        if not frozen:
            raise PartitionError("partition has no classes")
        total = len(seen) if n is None else n
        if n is not None:
            extra = sorted(v for v in seen if not 0 <= v < n)
            if extra:
                raise PartitionError(f"vertex {extra[0]} is not a vertex of the graph (0..{n - 1})")
        if len(seen) != total or (seen and (min(seen) < 0 or max(seen) >= total)):
            missing = next(v for v in range(total) if v not in seen)
            raise PartitionError(f"vertex {missing} is missing from the partition")
        return cls(tuple(frozen))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "VertexPartition":
        """Build from 1-based class labels per vertex; every label ``1..max`` must occur."""
        lab = np.asarray(labels, dtype=np.int64)
        if lab.size == 0:
            raise PartitionError("partition has no classes")
        if lab.min() < 1:
            raise PartitionError(f"class label {int(lab.min())} is not positive")
        k = int(lab.max())
        order = np.argsort(lab, kind="stable")
        bounds = np.searchsorted(lab[order], np.arange(1, k + 2))
        classes = []
        for i in range(k):
            members = order[bounds[i]:bounds[i + 1]]
            if members.size == 0:
                raise PartitionError(f"class {i + 1} is empty")
            classes.append(frozenset(members.tolist()))
        return cls(tuple(classes))

    def labels(self) -> np.ndarray:
        """1-based class label of every vertex."""
        out = np.zeros(self.n, dtype=np.int64)
        for i, members in enumerate(self.classes, 1):
            out[np.fromiter(members, dtype=np.int64, count=len(members))] = i
        return out

    def class_of(self, v: int) -> int:
        for i, members in enumerate(self.classes, 1):
            if v in members:
                return i
        raise KeyError(v)

    def merge_lowest(self) -> "VertexPartition":
        """Merge ``V_1`` and ``V_2`` into a new ``V_1`` and shift the rest down."""
        if self.k < 2:
            return self
        return VertexPartition((self.classes[0] | self.classes[1],) + self.classes[2:])

    def as_lists(self) -> list[list[int]]:
        return [sorted(c) for c in self.classes]
