"""
Lattice-level checks of the lemmas behind the four properties.
"""
import itertools
import logging
from typing import Dict, FrozenSet, List, Tuple

from congruences.coloring import congruence_data
from lattices.cells import boundary_chains, four_cells
from lattices.core import Edge, Lattice
from posets.peaks import peak_s7_find
from posets.properties import maximal_covers
from shared.models import EdgeKind
from swing.relations import edge_relations
from swing.trajectories import edge_classes, trajectories

logger = logging.getLogger(__name__)


def _no_common_lower_cover(lattice: Lattice, edges: Tuple[Edge, ...]) -> bool:
    data = congruence_data(lattice)
    covers = data.poset.cover_matrix
    for x, y in itertools.combinations(edges, 2):
        cx, cy = data.coloring[x], data.coloring[y]
        if (covers[:, cx] & covers[:, cy]).any():
            logger.debug(f"Colors of {x} and {y} share a lower cover")
            return False
    return True


def lemma_disjoint_check(lattice: Lattice) -> bool:
    """No color is covered by the colors of two distinct edges on one upper boundary side."""
    chains = boundary_chains(lattice)
    return (_no_common_lower_cover(lattice, chains.upper_left_edges())
            and _no_common_lower_cover(lattice, chains.upper_right_edges()))


def lemma_application_check(lattice: Lattice) -> bool:
    """Every normal-up edge climbs through upper-left cell edges to the upper-left boundary or a steep edge."""
    classes = edge_classes(lattice)
    upper_left = set(boundary_chains(lattice).upper_left_edges())
    climb: Dict[Edge, Edge] = {}
    for cell in four_cells(lattice):
        _, lower_right, upper_left_edge, _ = cell.edges()
        climb[lower_right] = upper_left_edge

    for edge, kind in classes.items():
        if kind is not EdgeKind.NORMAL_UP:
            continue
        current = edge
        while current not in upper_left and classes[current] is not EdgeKind.STEEP:
            if current not in climb:
                logger.debug(f"Normal-up edge {edge} gets stuck at {current}")
                return False
            current = climb[current]
    return True


def lemma_disj_check(lattice: Lattice) -> bool:
    """Distinct steep edges lie in disjoint trajectories."""
    seen = set()
    for trajectory in trajectories(lattice):
        if len(trajectory.steep_edges()) > 1 or seen.intersection(trajectory.edges):
            return False
        seen.update(trajectory.edges)
    return len(seen) == len(lattice.edges)


def boundary_partition(lattice: Lattice) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Colors of the upper-left and of the upper-right boundary edges."""
    chains = boundary_chains(lattice)
    col = congruence_data(lattice).coloring
    left = frozenset(col[e] for e in chains.upper_left_edges())
    right = frozenset(col[e] for e in chains.upper_right_edges())
    return left, right


def boundary_partition_check(lattice: Lattice) -> bool:
    """The two boundary color sets are disjoint and split Max(P) as the partition property asks."""
    left, right = boundary_partition(lattice)
    maximal = set(congruence_data(lattice).poset.maximal)
    if left & right or (left | right) != maximal:
        return False
    return lemma_disjoint_check(lattice)


def lemma_descent_side_check(lattice: Lattice) -> bool:
    """Down-perspectives of upper-left edges are normal-up, of upper-right edges normal-down."""
    classes = edge_classes(lattice)
    rel = edge_relations(lattice)
    chains = boundary_chains(lattice)
    for edges, kind in ((chains.upper_left_edges(), EdgeKind.NORMAL_UP),
                        (chains.upper_right_edges(), EdgeKind.NORMAL_DOWN)):
        for edge in edges:
            reached = rel.to_edges(rel.closure({rel.index[edge]}, rel.down))
            wrong = sorted(e for e in reached if classes[e] is not kind)
            if wrong:
                logger.debug(f"{edge} is down-perspective to {wrong[0]} which is not {kind.value}")
                return False
    return True


def _top_colorings(lattice: Lattice) -> List[Tuple[int, FrozenSet[int], int]]:
    col = congruence_data(lattice).coloring
    found = []
    for t in range(lattice.n):
        lows = lattice.lower_covers[t]
        if len(lows) < 3:
            continue
        middles = frozenset(col[Edge(x, t)] for x in lows[1:-1])
        found.append((col[Edge(lows[0], t)], middles, col[Edge(lows[-1], t)]))
    return found


def maximal_cover_witnesses(lattice: Lattice) -> bool:
    """Each v covered by a maximal u has a second cover exhibited at some multi-cover top.

    The top t must have u on one extreme edge, v on the middle edges and a
    color other than u, also covering v, on the other extreme edge.
    """
    poset = congruence_data(lattice).poset
    tops = _top_colorings(lattice)
    for v, u in maximal_covers(poset):
        witnessed = False
        for first, middles, last in tops:
            if middles != {v}:
                continue
            for mine, other in ((first, last), (last, first)):
                if mine == u and other != u and poset.is_cover(v, other):
                    witnessed = True
        if not witnessed:
            logger.debug(f"No top exhibits a second cover of {v} below {u}")
            return False
    return True


def cover_realization_check(lattice: Lattice) -> bool:
    """Every covering z < x of P shows up on a peak S7.

    The peak's middle edge has color z and its upper-left or upper-right
    edge has color x.
    """
    data = congruence_data(lattice)
    col = data.coloring
    realized = set()
    for peak in peak_s7_find(lattice):
        z = col[peak.middle]
        realized.add((z, col[peak.left_top]))
        realized.add((z, col[peak.right_top]))
    for cover in data.poset.covers:
        if cover not in realized:
            logger.debug(f"No peak S7 realizes the covering {cover[0]} < {cover[1]}")
            return False
    return True
