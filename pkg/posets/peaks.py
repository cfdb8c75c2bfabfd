"""
Peak S7 sublattices of slim rectangular lattices.
"""
from typing import List, NamedTuple

from lattices.core import Edge, Lattice


class PeakS7(NamedTuple):
    """An S7 sublattice whose three top intervals are edges.

    Only the top edges need to be covers; the lower part may stretch over
    longer intervals once forks are nested.
    """
    o: int
    p: int
    q: int
    a: int
    m: int
    b: int
    t: int

    @property
    def middle(self) -> Edge:
        return Edge(self.m, self.t)

    @property
    def left_top(self) -> Edge:
        return Edge(self.a, self.t)

    @property
    def right_top(self) -> Edge:
        return Edge(self.b, self.t)


def _is_s7(lattice: Lattice, a: int, m: int, b: int, t: int) -> bool:
    meet, join = lattice.meet, lattice.join
    p, q = int(meet[a, m]), int(meet[m, b])
    o = int(meet[p, q])
    if len({o, p, q, a, m, b, t}) != 7:
        return False
    return (meet[a, b] == o and join[p, q] == m
            and join[a, q] == t and join[p, b] == t)


def peak_s7_find(lattice: Lattice) -> List[PeakS7]:
    """All peak S7 sublattices, one per three consecutive lower covers of a top.

    Args:
        lattice: Slim rectangular lattice

    Returns:
        Occurrences ordered by top, then by the left-to-right position of a
    """
    meet = lattice.meet
    found = []
    for t in range(lattice.n):
        lows = lattice.lower_covers[t]
        for a, m, b in zip(lows, lows[1:], lows[2:]):
            if _is_s7(lattice, a, m, b, t):
                p, q = int(meet[a, m]), int(meet[m, b])
                found.append(PeakS7(int(meet[p, q]), p, q, a, m, b, t))
    return found
