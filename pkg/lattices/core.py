"""
Finite lattices with a planar left-to-right cover ordering.
"""
import logging
from functools import cached_property
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from shared.errors import InputFormatError, MultipleBottoms, MultipleTops, NotALattice
from shared.models import LatticeSpec

logger = logging.getLogger(__name__)


class Edge(NamedTuple):
    """A prime interval [bottom, top]."""
    bottom: int
    top: int

    def __str__(self) -> str:
        return f"{self.bottom}-{self.top}"

    @classmethod
    def parse(cls, text: str) -> "Edge":
        """Parse the ``bottom-top`` notation used in reports and CLI flags."""
        try:
            bottom, top = text.split("-")
            return cls(int(bottom), int(top))
        except ValueError as e:
            raise InputFormatError(f"edge must look like 'bottom-top', got {text!r}") from e


class FourCell(NamedTuple):
    """A 4-cell: bottom o, left a, right b, top t."""
    bottom: int
    left: int
    right: int
    top: int

    def edges(self) -> Tuple[Edge, Edge, Edge, Edge]:
        """Lower-left, lower-right, upper-left, upper-right edges."""
        return (
            Edge(self.bottom, self.left),
            Edge(self.bottom, self.right),
            Edge(self.left, self.top),
            Edge(self.right, self.top),
        )


class Lattice:
    """Immutable finite lattice with ordered cover lists.

    Element ids are ``0..n-1``. ``upper_covers[x]`` lists the covers of ``x``
    from left to right; ``lower_covers`` is derived from the 4-cells so that it
    follows the same planar embedding.
    """

    def __init__(self, upper_covers: Tuple[Tuple[int, ...], ...], leq: np.ndarray,
                 meet: np.ndarray, join: np.ndarray, bottom: int, top: int):
        self.n = len(upper_covers)
        self.upper_covers = upper_covers
        self.leq = leq
        self.meet = meet
        self.join = join
        self.bottom = bottom
        self.top = top
        self._cover_set = frozenset(
            (x, y) for x, ups in enumerate(upper_covers) for y in ups
        )
        self.lower_covers = self._derive_lower_covers()

    def __repr__(self) -> str:
        return f"Lattice(n={self.n}, edges={len(self.edges)})"

    def le(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b])

    def covers(self, a: int, b: int) -> bool:
        """True if ``b`` covers ``a``."""
        return (a, b) in self._cover_set

    def is_edge(self, edge: Edge) -> bool:
        return (edge.bottom, edge.top) in self._cover_set

    def is_meet_irreducible(self, x: int) -> bool:
        return len(self.upper_covers[x]) == 1

    def is_join_irreducible(self, x: int) -> bool:
        return len(self.lower_covers[x]) == 1

    def is_doubly_irreducible(self, x: int) -> bool:
        return self.is_meet_irreducible(x) and self.is_join_irreducible(x)

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(Edge(x, y) for x, y in self._cover_set))

    @cached_property
    def heights(self) -> Tuple[int, ...]:
        """Length of the longest chain from the bottom to each element."""
        height = [0] * self.n
        for x in self.topological_order:
            for y in self.upper_covers[x]:
                height[y] = max(height[y], height[x] + 1)
        return tuple(height)

    @cached_property
    def topological_order(self) -> Tuple[int, ...]:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self._cover_set)
        return tuple(nx.lexicographical_topological_sort(graph))

    @cached_property
    def discovery_rank(self) -> Tuple[int, ...]:
        """Leftmost-first depth-first discovery order from the bottom."""
        rank = [-1] * self.n
        stack = [self.bottom]
        counter = 0
        while stack:
            x = stack.pop()
            if rank[x] >= 0:
                continue
            rank[x] = counter
            counter += 1
            stack.extend(reversed(self.upper_covers[x]))
        return tuple(rank)

    def leftmost_chain(self) -> Tuple[int, ...]:
        """Maximal chain taking the first upper cover at every step."""
        return self._extreme_chain(0)

    def rightmost_chain(self) -> Tuple[int, ...]:
        """Maximal chain taking the last upper cover at every step."""
        return self._extreme_chain(-1)

    def _extreme_chain(self, position: int) -> Tuple[int, ...]:
        chain = [self.bottom]
        while self.upper_covers[chain[-1]]:
            chain.append(self.upper_covers[chain[-1]][position])
        return tuple(chain)

    def _derive_lower_covers(self) -> Tuple[Tuple[int, ...], ...]:
        unordered: List[List[int]] = [[] for _ in range(self.n)]
        for x, ups in enumerate(self.upper_covers):
            for y in ups:
                unordered[y].append(x)

        # a, b consecutive upper covers of o with a, b both covered by a v b
        # means a sits immediately left of b below a v b
        right_of: Dict[int, Dict[int, int]] = {}
        for ups in self.upper_covers:
            for a, b in zip(ups, ups[1:]):
                t = int(self.join[a, b])
                if self.covers(a, t) and self.covers(b, t):
                    right_of.setdefault(t, {})[a] = b

        ordered = []
        for t, lows in enumerate(unordered):
            chain = self._chain_lower_covers(lows, right_of.get(t, {}))
            if chain is None:
                chain = sorted(lows, key=lambda x: self.discovery_rank[x])
            ordered.append(tuple(chain))
        return tuple(ordered)

    @staticmethod
    def _chain_lower_covers(lows: List[int], right_of: Dict[int, int]) -> Optional[List[int]]:
        if len(lows) <= 1:
            return list(lows)
        starts = set(lows) - set(right_of.values())
        if len(starts) != 1:
            return None
        chain = [starts.pop()]
        while chain[-1] in right_of and len(chain) <= len(lows):
            chain.append(right_of[chain[-1]])
        if sorted(chain) != sorted(lows):
            return None
        return chain

    def to_spec(self) -> LatticeSpec:
        return LatticeSpec(n=self.n, upper_covers=[list(ups) for ups in self.upper_covers])


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def build_lattice(upper_covers: Sequence[Sequence[int]]) -> Lattice:
    """Build a lattice from ordered upper-cover lists.

    Args:
        upper_covers: For each element id, its upper covers from left to right

    Returns:
        Immutable lattice with order, meet and join tables

    Raises:
        InputFormatError: If ids are out of range, repeated, cyclic or not covers
        MultipleBottoms: If there is more than one minimal element
        MultipleTops: If there is more than one maximal element
        NotALattice: If some pair has no unique meet or join
    """
    n = len(upper_covers)
    if n == 0:
        raise InputFormatError("a lattice needs at least one element")

    covers = tuple(tuple(int(y) for y in ups) for ups in upper_covers)
    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    for x, ups in enumerate(covers):
        if len(set(ups)) != len(ups):
            raise InputFormatError(f"element {x} lists an upper cover twice")
        for y in ups:
            if not 0 <= y < n:
                raise InputFormatError(f"element {x} has out-of-range cover {y}")
            if y == x:
                raise InputFormatError(f"element {x} covers itself")
            graph.add_edge(x, y)

    if not nx.is_directed_acyclic_graph(graph):
        cycle = nx.find_cycle(graph)
        raise InputFormatError(f"cover relation has a cycle through {cycle[0][0]}")

    bottoms = tuple(x for x in range(n) if graph.in_degree(x) == 0)
    tops = tuple(x for x in range(n) if graph.out_degree(x) == 0)
    if len(bottoms) > 1:
        raise MultipleBottoms(bottoms)
    if len(tops) > 1:
        raise MultipleTops(tops)

    order = list(nx.topological_sort(graph))
    leq = np.eye(n, dtype=bool)
    for x in reversed(order):
        for y in covers[x]:
            leq[x] |= leq[y]

    for x, ups in enumerate(covers):
        for y in ups:
            # y is a cover only if nothing lies strictly between x and y
            between = leq[x] & leq[:, y]
            if between.sum() > 2:
                raise InputFormatError(f"pair {x} < {y} is not a covering pair")

    down_size = leq.sum(axis=0)
    up_size = leq.sum(axis=1)
    meet = np.empty((n, n), dtype=np.int64)
    join = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(a, n):
            lower = leq[:, a] & leq[:, b]
            g = int(np.where(lower, down_size, -1).argmax())
            if not lower[g] or (lower & ~leq[:, g]).any():
                raise NotALattice((a, b), "meet")
            meet[a, b] = meet[b, a] = g

            upper = leq[a] & leq[b]
            h = int(np.where(upper, up_size, -1).argmax())
            if not upper[h] or (upper & ~leq[h]).any():
                raise NotALattice((a, b), "join")
            join[a, b] = join[b, a] = h

    lattice = Lattice(covers, _frozen(leq), _frozen(meet), _frozen(join), bottoms[0], tops[0])
    logger.debug(f"Built {lattice!r}")
    return lattice


def lattice_from_spec(spec: LatticeSpec) -> Lattice:
    """Build a lattice from its JSON model."""
    if spec.n != len(spec.upper_covers):
        raise InputFormatError(
            f"n = {spec.n} but {len(spec.upper_covers)} cover lists were given"
        )
    return build_lattice(spec.upper_covers)
