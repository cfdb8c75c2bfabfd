"""
C1-diagram coordinates from the meets with the two corners, and their validation.
"""
import itertools
import logging
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Tuple

import numpy as np

from lattices.cells import boundary_chains
from lattices.core import Edge, Lattice
from posets.peaks import peak_s7_find
from shared.errors import LayoutDegenerate, NotRectangular
from shared.models import EdgeKind

logger = logging.getLogger(__name__)

Point = Tuple[Fraction, Fraction]


class Layout(NamedTuple):
    """Rational (x, y) position of every element."""
    positions: Tuple[Point, ...]

    def x(self, element: int) -> Fraction:
        return self.positions[element][0]

    def y(self, element: int) -> Fraction:
        return self.positions[element][1]

    def moved(self, element: int, dx: Fraction, dy: Fraction) -> "Layout":
        """Copy with one element shifted."""
        positions = list(self.positions)
        x, y = positions[element]
        positions[element] = (x + dx, y + dy)
        return Layout(tuple(positions))


def coordinates(lattice: Lattice) -> Layout:
    """Place each element at x = r - l, y = r + l.

    l(e) is the height of e ^ lc in the chain from the bottom to the left
    corner lc, and r(e) the height of e ^ rc in the chain to the right corner.

    Raises:
        NotRectangular: If an ideal below a corner is not the boundary chain
        LayoutDegenerate: If two elements land on the same point
    """
    chains = boundary_chains(lattice)
    left_height = {x: i for i, x in enumerate(chains.lower_left)}
    right_height = {x: i for i, x in enumerate(chains.lower_right)}

    positions: List[Point] = []
    for e in range(lattice.n):
        try:
            l = left_height[int(lattice.meet[e, chains.left_corner])]
            r = right_height[int(lattice.meet[e, chains.right_corner])]
        except KeyError as err:
            raise NotRectangular(f"element {e} meets a corner outside the boundary chain") from err
        positions.append((Fraction(r - l), Fraction(r + l)))

    seen: Dict[Point, int] = {}
    for e, point in enumerate(positions):
        if point in seen:
            raise LayoutDegenerate(seen[point], e)
        seen[point] = e
    return Layout(tuple(positions))


def slope_class(layout: Layout, edge: Edge) -> Optional[EdgeKind]:
    """Classify an edge by its slope; None if it is neither normal nor steep."""
    (x0, y0), (x1, y1) = layout.positions[edge.bottom], layout.positions[edge.top]
    dx, dy = x1 - x0, y1 - y0
    if dy <= 0:
        return None
    if dx == dy:
        return EdgeKind.NORMAL_UP
    if dx == -dy:
        return EdgeKind.NORMAL_DOWN
    if abs(dx) < dy:
        return EdgeKind.STEEP
    return None


class C1Verdict(NamedTuple):
    """Outcome of the C1-diagram check, with the first offending edge."""
    ok: bool
    edge: Optional[Edge] = None
    reason: Optional[str] = None


def _orientation(p: Point, q: Point, r: Point) -> int:
    value = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (value > 0) - (value < 0)


def _on_segment(p: Point, q: Point, r: Point) -> bool:
    """r lies on the closed segment pq, given the three are collinear."""
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def _segments_clash(layout: Layout, e: Edge, f: Edge) -> bool:
    p, q = layout.positions[e.bottom], layout.positions[e.top]
    r, s = layout.positions[f.bottom], layout.positions[f.top]
    shared = {e.bottom, e.top} & {f.bottom, f.top}
    if shared:
        # two edges through one endpoint only clash if they overlap
        common = layout.positions[shared.pop()]
        a = q if p == common else p
        b = s if r == common else r
        if _orientation(common, a, b) != 0:
            return False
        return (a[0] - common[0]) * (b[0] - common[0]) + (a[1] - common[1]) * (b[1] - common[1]) > 0

    o1, o2 = _orientation(p, q, r), _orientation(p, q, s)
    o3, o4 = _orientation(r, s, p), _orientation(r, s, q)
    if o1 != o2 and o3 != o4:
        return True
    return ((o1 == 0 and _on_segment(p, q, r)) or (o2 == 0 and _on_segment(p, q, s))
            or (o3 == 0 and _on_segment(r, s, p)) or (o4 == 0 and _on_segment(r, s, q)))


def _crossing(lattice: Lattice, layout: Layout) -> Optional[Tuple[Edge, Edge]]:
    edges = lattice.edges
    if len(edges) < 2:
        return None
    xs = np.array([[float(layout.x(e.bottom)), float(layout.x(e.top))] for e in edges])
    ys = np.array([[float(layout.y(e.bottom)), float(layout.y(e.top))] for e in edges])
    lo_x, hi_x = xs.min(axis=1), xs.max(axis=1)
    lo_y, hi_y = ys.min(axis=1), ys.max(axis=1)
    # bounding boxes that overlap are the only candidates
    overlap = ((lo_x[:, None] <= hi_x[None, :]) & (lo_x[None, :] <= hi_x[:, None])
               & (lo_y[:, None] <= hi_y[None, :]) & (lo_y[None, :] <= hi_y[:, None]))
    for i, j in zip(*np.nonzero(np.triu(overlap, k=1))):
        if _segments_clash(layout, edges[i], edges[j]):
            return edges[i], edges[j]
    return None


def validate_c1(lattice: Lattice, layout: Layout) -> C1Verdict:
    """Check that ``layout`` is a planar C1-diagram of ``lattice``.

    Steep edges must be exactly the middle edges of the peak S7 sublattices,
    every other edge must have slope 45 or 135 degrees, positions must be
    distinct, edges must not cross and cover lists must follow x-order.
    """
    for a, b in itertools.combinations(range(lattice.n), 2):
        if layout.positions[a] == layout.positions[b]:
            return C1Verdict(False, None, f"elements {a} and {b} share a position")

    middles = {peak.middle for peak in peak_s7_find(lattice)}
    for edge in lattice.edges:
        kind = slope_class(layout, edge)
        if kind is None:
            return C1Verdict(False, edge, "edge is neither normal nor steep")
        if (kind is EdgeKind.STEEP) != (edge in middles):
            expected = "steep" if edge in middles else "normal"
            return C1Verdict(False, edge, f"edge should be {expected}, drawn {kind.value}")

    for x in range(lattice.n):
        for covers, side in ((lattice.lower_covers[x], "lower"), (lattice.upper_covers[x], "upper")):
            xs = [layout.x(y) for y in covers]
            if any(a >= b for a, b in zip(xs, xs[1:])):
                edge = Edge(covers[0], x) if side == "lower" else Edge(x, covers[0])
                return C1Verdict(False, edge, f"{side} covers of {x} are not in left-to-right order")

    crossing = _crossing(lattice, layout)
    if crossing is not None:
        return C1Verdict(False, crossing[0], f"edge crosses {crossing[1]}")
    return C1Verdict(True)
