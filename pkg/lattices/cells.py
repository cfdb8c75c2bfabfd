"""
4-cells and boundary chains of slim rectangular lattices.
"""
from typing import List, NamedTuple, Tuple

from lattices.core import Edge, FourCell, Lattice
from lattices.validators import validate_rectangular
from shared.errors import NonFourCellRegion, NotRectangular


def four_cells(lattice: Lattice) -> List[FourCell]:
    """Enumerate the 4-cells, one per pair of consecutive upper covers.

    Raises:
        NonFourCellRegion: If some region is not a 4-cell
    """
    cells = []
    for o, ups in enumerate(lattice.upper_covers):
        for a, b in zip(ups, ups[1:]):
            t = int(lattice.join[a, b])
            if not (lattice.covers(a, t) and lattice.covers(b, t)):
                raise NonFourCellRegion(o, f"{a} v {b} = {t} does not cover both")
            if lattice.meet[a, b] != o:
                raise NonFourCellRegion(o, f"{a} ^ {b} is not {o}")
            cells.append(FourCell(o, a, b, t))
    return cells


def cell_at(lattice: Lattice, bottom: int) -> FourCell:
    """The 4-cell whose bottom is ``bottom`` (first consecutive pair)."""
    ups = lattice.upper_covers[bottom]
    if len(ups) < 2:
        raise KeyError(bottom)
    a, b = ups[0], ups[1]
    return FourCell(bottom, a, b, int(lattice.join[a, b]))


def _chain_edges(chain: Tuple[int, ...]) -> Tuple[Edge, ...]:
    return tuple(Edge(x, y) for x, y in zip(chain, chain[1:]))


class BoundaryChains(NamedTuple):
    """Left and right boundary chains split at the corners."""
    left: Tuple[int, ...]
    right: Tuple[int, ...]
    left_corner: int
    right_corner: int

    @property
    def lower_left(self) -> Tuple[int, ...]:
        return self.left[: self.left.index(self.left_corner) + 1]

    @property
    def upper_left(self) -> Tuple[int, ...]:
        return self.left[self.left.index(self.left_corner):]

    @property
    def lower_right(self) -> Tuple[int, ...]:
        return self.right[: self.right.index(self.right_corner) + 1]

    @property
    def upper_right(self) -> Tuple[int, ...]:
        return self.right[self.right.index(self.right_corner):]

    def upper_left_edges(self) -> Tuple[Edge, ...]:
        return _chain_edges(self.upper_left)

    def upper_right_edges(self) -> Tuple[Edge, ...]:
        return _chain_edges(self.upper_right)

    def upper_edges(self) -> Tuple[Edge, ...]:
        return self.upper_left_edges() + self.upper_right_edges()

    def boundary_edges(self) -> Tuple[Edge, ...]:
        return _chain_edges(self.left) + _chain_edges(self.right)


def boundary_chains(lattice: Lattice) -> BoundaryChains:
    """Leftmost and rightmost maximal chains of a slim rectangular lattice.

    Raises:
        NotRectangular: From the corner search, or if the chains meet inside
    """
    left_corner, right_corner = validate_rectangular(lattice)
    left = lattice.leftmost_chain()
    right = lattice.rightmost_chain()
    if set(left) & set(right) != {lattice.bottom, lattice.top}:
        raise NotRectangular("left and right boundary chains share an inner element")
    return BoundaryChains(left, right, left_corner, right_corner)
