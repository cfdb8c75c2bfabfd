"""
The ordered set P of join-irreducible congruences and the edge coloring.
"""
import logging
import weakref
from typing import Dict, List, NamedTuple, Tuple

import numpy as np

from congruences.closure import Congruence, principal_congruence
from congruences.poset import FinitePoset
from lattices.core import Edge, Lattice

logger = logging.getLogger(__name__)

Coloring = Dict[Edge, int]


class CongruenceData(NamedTuple):
    """Per-lattice congruence oracle results."""
    by_edge: Dict[Edge, Congruence]
    classes: Tuple[Congruence, ...]
    poset: FinitePoset
    coloring: Coloring


_cache: "weakref.WeakKeyDictionary[Lattice, CongruenceData]" = weakref.WeakKeyDictionary()


def congruence_data(lattice: Lattice) -> CongruenceData:
    """Principal congruence of every edge, P and col, computed once per lattice."""
    cached = _cache.get(lattice)
    if cached is not None:
        return cached

    by_edge = {edge: principal_congruence(lattice, edge) for edge in lattice.edges}
    distinct: Dict[Congruence, Tuple[Edge, ...]] = {}
    for con in by_edge.values():
        if con not in distinct:
            distinct[con] = con.collapsed_edges(lattice)
    # P indices follow the sorted collapsed-edge sets
    classes = tuple(sorted(distinct, key=distinct.__getitem__))

    k = len(classes)
    leq = np.eye(k, dtype=bool)
    for i, lower in enumerate(classes):
        for j, upper in enumerate(classes):
            if i != j and lower.refines(upper):
                leq[i, j] = True
    poset = FinitePoset(leq)

    position = {con: i for i, con in enumerate(classes)}
    coloring = {edge: position[con] for edge, con in by_edge.items()}
    data = CongruenceData(by_edge, classes, poset, coloring)
    _cache[lattice] = data
    logger.debug(f"P has {k} elements over {len(by_edge)} edges, maximal {list(poset.maximal)}")
    return data


def ji_poset(lattice: Lattice) -> Tuple[FinitePoset, Coloring]:
    """The join-irreducible congruences ordered by refinement, and col.

    Args:
        lattice: Finite lattice

    Returns:
        (P, col) where col maps every edge to the index of con(edge) in P
    """
    data = congruence_data(lattice)
    return data.poset, data.coloring


def leq_oracle(lattice: Lattice, u: Edge, v: Edge) -> bool:
    """True if con(v) is contained in con(u)."""
    by_edge = congruence_data(lattice).by_edge
    return by_edge[v].refines(by_edge[u])


def color_classes(lattice: Lattice) -> List[Tuple[Edge, ...]]:
    """Edges grouped by color, indexed like P."""
    data = congruence_data(lattice)
    groups: List[List[Edge]] = [[] for _ in data.classes]
    for edge in lattice.edges:
        groups[data.coloring[edge]].append(edge)
    return [tuple(group) for group in groups]
