"""
Error hierarchy for the slim lattice toolkit.
"""
from typing import Any, Optional, Tuple


class SlattError(ValueError):
    """Base class for all domain errors raised by the toolkit."""


class ConfigError(SlattError):
    """Configuration file could not be read or failed validation."""


class InputFormatError(SlattError):
    """Input JSON is malformed or does not match a known schema."""


class NotALattice(SlattError):
    """Some pair of elements lacks a unique meet or join."""

    def __init__(self, pair: Tuple[int, int], operation: str):
        self.pair = pair
        self.operation = operation
        super().__init__(
            f"elements {pair[0]} and {pair[1]} have no unique {operation}"
        )


class MultipleBottoms(SlattError):
    """The cover relation has more than one minimal element."""

    def __init__(self, elements: Tuple[int, ...]):
        self.elements = elements
        super().__init__(f"more than one minimal element: {list(elements)}")


class MultipleTops(SlattError):
    """The cover relation has more than one maximal element."""

    def __init__(self, elements: Tuple[int, ...]):
        self.elements = elements
        super().__init__(f"more than one maximal element: {list(elements)}")


class NotRectangular(SlattError):
    """The lattice has no complementary pair of boundary corners."""


class NonFourCellRegion(SlattError):
    """An interior region of the diagram is not a 4-cell."""

    def __init__(self, bottom: int, message: str):
        self.bottom = bottom
        super().__init__(f"region above element {bottom}: {message}")


class MethodsDisagree(SlattError):
    """The M3 scan and the two-chains criterion gave different verdicts."""


class BadDims(SlattError):
    """Grid dimensions below 2."""

    def __init__(self, m: int, n: int):
        self.dims = (m, n)
        super().__init__(f"grid dimensions must both be at least 2, got {m}x{n}")


class NotACell(SlattError):
    """The given elements do not form a 4-cell of the lattice."""


class DanglingCellRef(SlattError):
    """A recipe step names a cell bottom that does not exist at that step."""

    def __init__(self, step: int, cell_bottom: Any):
        self.step = step
        self.cell_bottom = cell_bottom
        super().__init__(
            f"fork step {step}: element {cell_bottom} is not the bottom of a 4-cell"
        )


class ClassificationMismatch(SlattError):
    """Trajectory classification and peak-middle classification disagree."""

    def __init__(self, edge: Any, message: str):
        self.edge = edge
        super().__init__(f"edge {edge}: {message}")


class CovnewViolation(SlattError):
    """One of the three covering equations around a fork top failed."""

    def __init__(self, equation: int, message: str, edge: Optional[Any] = None,
                 strictly_below: bool = False):
        self.equation = equation
        self.edge = edge
        # equation (3) only: col T lies below the extreme color without being covered
        self.strictly_below = strictly_below
        super().__init__(f"equation ({equation}) violated: {message}")


class MaxMismatch(SlattError):
    """Upper boundary colors differ from the maximal elements of P."""


class LayoutDegenerate(SlattError):
    """Two elements received the same coordinates."""

    def __init__(self, first: int, second: int):
        self.pair = (first, second)
        super().__init__(f"elements {first} and {second} share a position")
