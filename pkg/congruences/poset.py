"""
Finite partially ordered sets given by an order matrix.
"""
from functools import cached_property
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from shared.errors import InputFormatError


class FinitePoset:
    """Partial order on ``0..k-1`` with optional display labels.

    ``leq[i, j]`` is True when i <= j. Covers are the transitive reduction.
    """

    def __init__(self, leq: np.ndarray, labels: Optional[Sequence[Hashable]] = None):
        leq = np.asarray(leq, dtype=bool)
        k = leq.shape[0]
        if leq.shape != (k, k):
            raise InputFormatError(f"order matrix must be square, got {leq.shape}")
        if not leq.diagonal().all():
            raise InputFormatError("order relation is not reflexive")
        if (leq & leq.T & ~np.eye(k, dtype=bool)).any():
            raise InputFormatError("order relation is not antisymmetric")
        if k and ((leq.astype(np.int64) @ leq.astype(np.int64) > 0) & ~leq).any():
            raise InputFormatError("order relation is not transitive")
        self.k = k
        self.leq = leq
        self.labels: Tuple[Hashable, ...] = tuple(labels) if labels is not None else tuple(range(k))
        if len(self.labels) != k:
            raise InputFormatError(f"{len(self.labels)} labels for {k} elements")

    @classmethod
    def from_covers(cls, labels: Sequence[Hashable],
                    covers: Iterable[Tuple[Hashable, Hashable]]) -> "FinitePoset":
        """Build a poset from labelled elements and cover pairs ``(lower, upper)``."""
        index: Dict[Hashable, int] = {label: i for i, label in enumerate(labels)}
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(index)))
        for lower, upper in covers:
            graph.add_edge(index[lower], index[upper])
        if not nx.is_directed_acyclic_graph(graph):
            raise InputFormatError("cover pairs contain a cycle")
        leq = np.eye(len(index), dtype=bool)
        for i, j in nx.transitive_closure_dag(graph).edges:
            leq[i, j] = True
        return cls(leq, labels)

    def __len__(self) -> int:
        return self.k

    def __repr__(self) -> str:
        return f"FinitePoset(k={self.k}, covers={len(self.covers)})"

    def index(self, label: Hashable) -> int:
        return self.labels.index(label)

    def le(self, i: int, j: int) -> bool:
        return bool(self.leq[i, j])

    def lt(self, i: int, j: int) -> bool:
        return i != j and bool(self.leq[i, j])

    @cached_property
    def cover_matrix(self) -> np.ndarray:
        lt = self.leq & ~np.eye(self.k, dtype=bool)
        through = lt.astype(np.int64) @ lt.astype(np.int64) > 0
        return lt & ~through

    @cached_property
    def covers(self) -> Tuple[Tuple[int, int], ...]:
        """Cover pairs ``(i, j)`` with i covered by j, sorted."""
        return tuple((int(i), int(j)) for i, j in zip(*np.nonzero(self.cover_matrix)))

    def is_cover(self, i: int, j: int) -> bool:
        return bool(self.cover_matrix[i, j])

    def upper_covers(self, i: int) -> List[int]:
        return np.flatnonzero(self.cover_matrix[i]).tolist()

    def lower_covers(self, i: int) -> List[int]:
        return np.flatnonzero(self.cover_matrix[:, i]).tolist()

    @cached_property
    def maximal(self) -> Tuple[int, ...]:
        strictly_above = (self.leq & ~np.eye(self.k, dtype=bool)).any(axis=1)
        return tuple(np.flatnonzero(~strictly_above).tolist())

    def is_maximal(self, i: int) -> bool:
        return i in self.maximal
