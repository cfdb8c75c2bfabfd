"""
Validators for semimodular, slim and rectangular lattices.
"""
import itertools
import logging
from typing import NamedTuple, Optional, Tuple

import networkx as nx
import numpy as np

from lattices.core import Lattice
from shared.errors import MethodsDisagree, NotRectangular

logger = logging.getLogger(__name__)

# the M3 triple scan only runs below this size; larger lattices use two chains only
M3_SCAN_LIMIT = 64


class Verdict(NamedTuple):
    """Outcome of a validator: ``ok`` or a witness tuple of element ids."""
    ok: bool
    witness: Optional[Tuple[int, ...]] = None
    reason: Optional[str] = None


def validate_semimodular(lattice: Lattice) -> Verdict:
    """Check that a ^ b < a implies b < a v b (both as covers).

    Args:
        lattice: Lattice to check

    Returns:
        ok, or the first violating pair (a, b)
    """
    for a in range(lattice.n):
        for b in range(lattice.n):
            m = int(lattice.meet[a, b])
            if lattice.covers(m, a) and not lattice.covers(b, int(lattice.join[a, b])):
                return Verdict(False, (a, b), f"{m} < {a} is a cover but {b} is not covered by {a} v {b}")
    return Verdict(True)


def find_m3(lattice: Lattice) -> Optional[Tuple[int, int, int]]:
    """Brute-force search for three atoms of an M3 sublattice.

    Returns:
        The first triple (x, y, z) of pairwise incomparable elements with a
        common meet and a common join, or None
    """
    meet, join, leq = lattice.meet, lattice.join, lattice.leq
    ids = np.arange(lattice.n)
    for x, y in itertools.combinations(range(lattice.n), 2):
        if leq[x, y] or leq[y, x]:
            continue
        o, i = meet[x, y], join[x, y]
        mask = (meet[x] == o) & (join[x] == i) & (meet[y] == o) & (join[y] == i)
        mask &= (ids != x) & (ids != y) & (ids != o) & (ids != i)
        hits = np.flatnonzero(mask)
        if hits.size:
            return (x, y, int(hits[0]))
    return None


def join_irreducibles_form_two_chains(lattice: Lattice) -> bool:
    """True if the join-irreducible elements are covered by two chains."""
    irreducibles = [x for x in range(lattice.n) if lattice.is_join_irreducible(x)]
    graph = nx.Graph()
    graph.add_nodes_from(irreducibles)
    for x, y in itertools.combinations(irreducibles, 2):
        if not lattice.le(x, y) and not lattice.le(y, x):
            graph.add_edge(x, y)
    # width <= 2 exactly when the incomparability graph has no odd cycle
    return nx.is_bipartite(graph)


def validate_slim(lattice: Lattice) -> Verdict:
    """Check slimness by the M3 scan and by the two-chains criterion.

    Raises:
        MethodsDisagree: If both methods run and give different answers
    """
    two_chains = join_irreducibles_form_two_chains(lattice)
    if lattice.n > M3_SCAN_LIMIT:
        if two_chains:
            return Verdict(True)
        return Verdict(False, None, "join-irreducible elements do not form two chains")

    triple = find_m3(lattice)
    if (triple is None) != two_chains:
        raise MethodsDisagree(
            f"M3 scan found {triple}, two-chains criterion says {two_chains}"
        )
    if triple is None:
        return Verdict(True)
    return Verdict(False, triple, f"elements {triple} generate an M3 sublattice")


def validate_rectangular(lattice: Lattice) -> Tuple[int, int]:
    """Find the left and right corners of a slim rectangular lattice.

    Returns:
        (left corner, right corner)

    Raises:
        NotRectangular: If a boundary chain does not have exactly one doubly
            irreducible inner element, or the corners are not complementary
    """
    corners = []
    for side, chain in (("left", lattice.leftmost_chain()), ("right", lattice.rightmost_chain())):
        candidates = [x for x in chain[1:-1] if lattice.is_doubly_irreducible(x)]
        if len(candidates) != 1:
            raise NotRectangular(
                f"{side} boundary has {len(candidates)} doubly irreducible elements"
                f" {candidates}, expected exactly one"
            )
        corners.append(candidates[0])

    left, right = corners
    if lattice.meet[left, right] != lattice.bottom or lattice.join[left, right] != lattice.top:
        raise NotRectangular(f"corners {left} and {right} are not complementary")
    return left, right
