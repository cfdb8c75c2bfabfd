"""
The four congruence-lattice properties as checkers on an abstract poset.

These functions look only at the poset; they never consult a lattice.
"""
import itertools
from typing import Any, List, NamedTuple, Optional, Tuple

import networkx as nx

from congruences.poset import FinitePoset


class PropertyVerdict(NamedTuple):
    """Checker outcome with an optional witness."""
    holds: bool
    witness: Optional[Any] = None


def common_lower_cover_graph(poset: FinitePoset) -> nx.Graph:
    """Graph on the maximal elements joining two that share a lower cover."""
    graph = nx.Graph()
    graph.add_nodes_from(poset.maximal)
    for u, w in itertools.combinations(poset.maximal, 2):
        if (poset.cover_matrix[:, u] & poset.cover_matrix[:, w]).any():
            graph.add_edge(u, w)
    return graph


def _least_bipartition(graph: nx.Graph) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    sides = []
    for component in sorted((sorted(c) for c in nx.connected_components(graph)), key=lambda c: c[0]):
        colors = nx.bipartite.color(graph.subgraph(component))
        left = tuple(x for x in component if colors[x] == colors[component[0]])
        right = tuple(x for x in component if colors[x] != colors[component[0]])
        sides.append((left, right))

    best: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]] = None
    # the least element always lies in the first class, so its component keeps its orientation
    for flips in itertools.product((False, True), repeat=len(sides) - 1):
        first: List[int] = list(sides[0][0])
        second: List[int] = list(sides[0][1])
        for (left, right), flip in zip(sides[1:], flips):
            first.extend(right if flip else left)
            second.extend(left if flip else right)
        if not second:
            continue
        candidate = (tuple(sorted(first)), tuple(sorted(second)))
        if best is None or candidate < best:
            best = candidate
    return best


def partition_property(poset: FinitePoset) -> PropertyVerdict:
    """Max(P) splits into two nonempty classes with no common lower cover inside a class.

    Returns:
        Verdict with the lexicographically least bipartition as witness, comparing
        the sorted first class and then the sorted second class
    """
    graph = common_lower_cover_graph(poset)
    if len(poset.maximal) < 2 or not nx.is_bipartite(graph):
        return PropertyVerdict(False)
    return PropertyVerdict(True, _least_bipartition(graph))


def maximal_cover_property(poset: FinitePoset) -> PropertyVerdict:
    """If v is covered by a maximal u, then u is not the only cover of v.

    Returns:
        Verdict with the offending v as witness
    """
    for u in poset.maximal:
        for v in poset.lower_covers(u):
            if len(poset.upper_covers(v)) < 2:
                return PropertyVerdict(False, v)
    return PropertyVerdict(True)


def no_child_property(poset: FinitePoset) -> PropertyVerdict:
    """No z is covered by two distinct lower covers x, y of a maximal element u.

    Returns:
        Verdict with the first (x, y, z, u) found as witness
    """
    for u in poset.maximal:
        for x, y in itertools.combinations(poset.lower_covers(u), 2):
            shared = poset.cover_matrix[:, x] & poset.cover_matrix[:, y]
            if shared.any():
                z = int(shared.nonzero()[0][0])
                return PropertyVerdict(False, (x, y, z, u))
    return PropertyVerdict(True)


def maximal_covers(poset: FinitePoset) -> List[Tuple[int, int]]:
    """Pairs (v, u) with u maximal and v covered by u."""
    return [(v, u) for u in poset.maximal for v in poset.lower_covers(u)]
