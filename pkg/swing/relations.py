"""
Prime transpositions and swings between edges.
"""
import weakref
from functools import cached_property
from typing import Dict, List, Set, Tuple

import numpy as np

from lattices.core import Edge, Lattice
from shared.models import SwingKind


def _edge_arrays(lattice: Lattice) -> Tuple[np.ndarray, np.ndarray]:
    edges = lattice.edges
    bottoms = np.array([e.bottom for e in edges], dtype=np.int64)
    tops = np.array([e.top for e in edges], dtype=np.int64)
    return bottoms, tops


def up_transpose(lattice: Lattice, u: Edge) -> Set[Edge]:
    """Edges R != U with 0_U = 1_U ^ 0_R and 1_R = 1_U v 0_R."""
    bottoms, tops = _edge_arrays(lattice)
    mask = (lattice.meet[u.top, bottoms] == u.bottom) & (lattice.join[u.top, bottoms] == tops)
    return {e for e, hit in zip(lattice.edges, mask) if hit and e != u}


def down_transpose(lattice: Lattice, u: Edge) -> Set[Edge]:
    """Edges R != U with 0_R = 1_R ^ 0_U and 1_U = 1_R v 0_U."""
    bottoms, tops = _edge_arrays(lattice)
    mask = (lattice.meet[tops, u.bottom] == bottoms) & (lattice.join[tops, u.bottom] == u.top)
    return {e for e, hit in zip(lattice.edges, mask) if hit and e != u}


def _is_interior(lattice: Lattice, top: int, bottom: int) -> bool:
    lows = lattice.lower_covers[top]
    return bottom in lows[1:-1]


def swing_rel(lattice: Lattice, u: Edge, v: Edge) -> SwingKind:
    """Whether U swings to V, and how.

    U swings to V when both share a top w covering at least three elements
    and 0_V is neither the left-most nor the right-most lower cover of w. The
    swing is interior if 0_U is not extreme either, exterior otherwise.
    """
    if u.top != v.top or len(lattice.lower_covers[u.top]) < 3:
        return SwingKind.NONE
    if not _is_interior(lattice, v.top, v.bottom):
        return SwingKind.NONE
    if _is_interior(lattice, u.top, u.bottom):
        return SwingKind.INTERIOR
    return SwingKind.EXTERIOR


class EdgeRelations:
    """Adjacency lists of the edge relations of one lattice, by edge index."""

    def __init__(self, lattice: Lattice):
        self.lattice = lattice
        self.edges: Tuple[Edge, ...] = lattice.edges
        self.index: Dict[Edge, int] = {e: i for i, e in enumerate(self.edges)}

    def _lists(self, relation) -> List[List[int]]:
        return [sorted(self.index[r] for r in relation(self.lattice, e)) for e in self.edges]

    @cached_property
    def up(self) -> List[List[int]]:
        return self._lists(up_transpose)

    @cached_property
    def down(self) -> List[List[int]]:
        # R is down-perspective from U exactly when U is up-perspective from R
        down: List[List[int]] = [[] for _ in self.edges]
        for i, targets in enumerate(self.up):
            for j in targets:
                down[j].append(i)
        return [sorted(targets) for targets in down]

    def _swings(self, kind: SwingKind) -> List[List[int]]:
        swings: List[List[int]] = [[] for _ in self.edges]
        by_top: Dict[int, List[int]] = {}
        for i, e in enumerate(self.edges):
            by_top.setdefault(e.top, []).append(i)
        for group in by_top.values():
            for i in group:
                for j in group:
                    if i != j and swing_rel(self.lattice, self.edges[i], self.edges[j]) is kind:
                        swings[i].append(j)
        return swings

    @cached_property
    def interior(self) -> List[List[int]]:
        return self._swings(SwingKind.INTERIOR)

    @cached_property
    def exterior(self) -> List[List[int]]:
        return self._swings(SwingKind.EXTERIOR)

    @cached_property
    def descend(self) -> List[List[int]]:
        """Down-perspectivities and swings of either kind."""
        return [sorted(set(d) | set(i) | set(x))
                for d, i, x in zip(self.down, self.interior, self.exterior)]

    def closure(self, starts: Set[int], adjacency: List[List[int]]) -> Set[int]:
        """Reflexive-transitive closure of ``starts`` under one relation."""
        seen = set(starts)
        frontier = list(starts)
        while frontier:
            nxt = []
            for i in frontier:
                for j in adjacency[i]:
                    if j not in seen:
                        seen.add(j)
                        nxt.append(j)
            frontier = nxt
        return seen

    @staticmethod
    def step(sources: Set[int], adjacency: List[List[int]]) -> Set[int]:
        """Targets of a single step from any source."""
        return {j for i in sources for j in adjacency[i]}

    def to_edges(self, indices: Set[int]) -> Set[Edge]:
        return {self.edges[i] for i in indices}


_relations: "weakref.WeakKeyDictionary[Lattice, EdgeRelations]" = weakref.WeakKeyDictionary()


def edge_relations(lattice: Lattice) -> EdgeRelations:
    """Cached relation tables for ``lattice``."""
    relations = _relations.get(lattice)
    if relations is None:
        relations = EdgeRelations(lattice)
        _relations[lattice] = relations
    return relations
