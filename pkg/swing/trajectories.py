"""
Trajectories and the normal-up / normal-down / steep classification of edges.
"""
import logging
import weakref
from typing import Dict, List, NamedTuple, Tuple

from lattices.cells import boundary_chains, four_cells
from lattices.core import Edge, Lattice
from posets.peaks import peak_s7_find
from shared.errors import ClassificationMismatch
from shared.models import EdgeKind

logger = logging.getLogger(__name__)


class Trajectory(NamedTuple):
    """Maximal sequence of consecutive edges, ordered left to right."""
    edges: Tuple[Edge, ...]
    top_index: int
    kinds: Tuple[EdgeKind, ...]

    @property
    def top(self) -> Edge:
        return self.edges[self.top_index]

    def steep_edges(self) -> Tuple[Edge, ...]:
        return tuple(e for e, kind in zip(self.edges, self.kinds) if kind is EdgeKind.STEEP)


def _right_neighbors(lattice: Lattice) -> Dict[Edge, Edge]:
    right_of: Dict[Edge, Edge] = {}
    for cell in four_cells(lattice):
        lower_left, lower_right, upper_left, upper_right = cell.edges()
        right_of[lower_left] = upper_right
        right_of[upper_left] = lower_right
    return right_of


def _top_index(lattice: Lattice, edges: Tuple[Edge, ...]) -> int:
    best = max(range(len(edges)), key=lambda i: lattice.heights[edges[i].top])
    if not all(lattice.le(e.top, edges[best].top) for e in edges):
        raise ClassificationMismatch(edges[best], "trajectory has no greatest top")
    return best


def trajectories(lattice: Lattice) -> List[Trajectory]:
    """Split the edges of a slim rectangular lattice into trajectories.

    Edges left of the top edge are normal-down and edges right of it are
    normal-up. The top edge is normal-up on the upper-left boundary,
    normal-down on the upper-right boundary and steep elsewhere.

    Returns:
        Trajectories ordered by their leftmost edge
    """
    right_of = _right_neighbors(lattice)
    has_left = set(right_of.values())
    chains = boundary_chains(lattice)
    upper_left = set(chains.upper_left_edges())
    upper_right = set(chains.upper_right_edges())

    result = []
    covered = 0
    for start in lattice.edges:
        if start in has_left:
            continue
        edges = [start]
        while edges[-1] in right_of:
            edges.append(right_of[edges[-1]])
        edges = tuple(edges)
        top = _top_index(lattice, edges)

        kinds = [EdgeKind.NORMAL_DOWN] * top + [EdgeKind.NORMAL_UP] * (len(edges) - top)
        if edges[top] in upper_left:
            kinds[top] = EdgeKind.NORMAL_UP
        elif edges[top] in upper_right:
            kinds[top] = EdgeKind.NORMAL_DOWN
        else:
            kinds[top] = EdgeKind.STEEP
        result.append(Trajectory(edges, top, tuple(kinds)))
        covered += len(edges)

    if covered != len(lattice.edges):
        raise ClassificationMismatch(None, f"trajectories cover {covered} of {len(lattice.edges)} edges")
    return result


_classes: "weakref.WeakKeyDictionary[Lattice, Dict[Edge, EdgeKind]]" = weakref.WeakKeyDictionary()


def edge_classes(lattice: Lattice) -> Dict[Edge, EdgeKind]:
    """Classification of every edge, cross-checked against the peak S7 middles.

    Raises:
        ClassificationMismatch: If the trajectory rule and the peak rule disagree
    """
    cached = _classes.get(lattice)
    if cached is not None:
        return cached

    classes: Dict[Edge, EdgeKind] = {}
    for trajectory in trajectories(lattice):
        if len(trajectory.steep_edges()) > 1:
            raise ClassificationMismatch(trajectory.top, "trajectory has two steep edges")
        classes.update(zip(trajectory.edges, trajectory.kinds))

    middles = {peak.middle for peak in peak_s7_find(lattice)}
    steep = {e for e, kind in classes.items() if kind is EdgeKind.STEEP}
    mismatched = sorted(steep ^ middles)
    if mismatched:
        edge = mismatched[0]
        kind = "steep" if edge in steep else "normal"
        raise ClassificationMismatch(
            edge, f"trajectory rule says {kind} but peak S7 middles say otherwise"
        )
    _classes[lattice] = classes
    logger.debug(f"{len(steep)} steep edges: {[str(e) for e in sorted(steep)]}")
    return classes


def classify_edge(lattice: Lattice, edge: Edge) -> EdgeKind:
    """Slope class of ``edge`` in a C1-diagram of ``lattice``."""
    return edge_classes(lattice)[edge]


def trajectory_of(lattice: Lattice) -> Dict[Edge, int]:
    """Index of the trajectory containing each edge."""
    return {e: i for i, t in enumerate(trajectories(lattice)) for e in t.edges}
