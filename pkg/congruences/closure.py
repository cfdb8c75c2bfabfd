"""
Principal congruences of finite lattices by compatibility closure.
"""
import logging
from typing import Iterable, Tuple

import numpy as np

from lattices.core import Edge, Lattice

logger = logging.getLogger(__name__)


class Congruence:
    """A partition of lattice elements, stored as one block label per element.

    Labels are canonical: blocks are numbered by their smallest element, so two
    congruences are equal exactly when their label arrays are equal.
    """

    def __init__(self, labels: Iterable[int]):
        raw = np.asarray(list(labels), dtype=np.int64)
        _, first, inverse = np.unique(raw, return_index=True, return_inverse=True)
        rank = np.argsort(np.argsort(first))
        self.labels: Tuple[int, ...] = tuple(int(x) for x in rank[inverse.ravel()])

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def classes(self) -> Tuple[Tuple[int, ...], ...]:
        blocks = [[] for _ in range(max(self.labels) + 1)]
        for x, label in enumerate(self.labels):
            blocks[label].append(x)
        return tuple(tuple(block) for block in blocks)

    def relates(self, a: int, b: int) -> bool:
        return self.labels[a] == self.labels[b]

    def collapses(self, edge: Edge) -> bool:
        return self.relates(edge.bottom, edge.top)

    def collapsed_edges(self, lattice: Lattice) -> Tuple[Edge, ...]:
        """Edges of ``lattice`` inside a block, sorted."""
        return tuple(edge for edge in lattice.edges if self.collapses(edge))

    def refines(self, other: "Congruence") -> bool:
        """True if every block of ``self`` lies inside a block of ``other``."""
        image = {}
        for mine, theirs in zip(self.labels, other.labels):
            if image.setdefault(mine, theirs) != theirs:
                return False
        return True

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Congruence) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __str__(self) -> str:
        return ", ".join("{" + ",".join(map(str, c)) + "}" for c in self.classes)

    def __repr__(self) -> str:
        return f"Congruence({self})"


def principal_congruence(lattice: Lattice, edge: Edge) -> Congruence:
    """Least congruence collapsing ``edge``.

    Every merged pair (a, b) pushes (a ^ c, b ^ c) and (a v c, b v c) for all c
    whose images still lie in different blocks, until nothing is left to merge.

    Args:
        lattice: Finite lattice
        edge: Edge to collapse

    Returns:
        The principal congruence con(edge)
    """
    labels = np.arange(lattice.n)
    pending = [(edge.bottom, edge.top)]
    while pending:
        a, b = pending.pop()
        la, lb = labels[a], labels[b]
        if la == lb:
            continue
        labels[labels == lb] = la
        for table in (lattice.meet, lattice.join):
            xs, ys = table[a], table[b]
            differ = np.flatnonzero(labels[xs] != labels[ys])
            pending.extend(zip(xs[differ].tolist(), ys[differ].tolist()))
    return Congruence(labels)
