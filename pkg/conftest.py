"""
Shared fixtures for the slim lattice toolkit tests.
"""
import sys
from pathlib import Path

import pytest

# Add the project root to the Python path
sys.path.insert(0, str(Path(__file__).parent))

from congruences.poset import FinitePoset  # noqa: E402
from lattices.construct import apply_recipe, fork_at, grid  # noqa: E402
from lattices.core import build_lattice  # noqa: E402
from shared.models import Recipe  # noqa: E402

# S7 element ids after canonical renumbering
O, P, Q, A, M, B, T = range(7)

# cell bottom of the top cell of grid(3,3), i.e. grid position (1, 1)
GRID33_TOP_CELL = 4


@pytest.fixture
def s7():
    return apply_recipe(Recipe(grid=(2, 2), forks=(0,)))


@pytest.fixture
def grid22():
    return grid(2, 2)


@pytest.fixture
def grid33():
    return grid(3, 3)


@pytest.fixture
def forked33():
    """grid(3,3) with a fork in the cell below the top."""
    return fork_at(grid(3, 3), GRID33_TOP_CELL)


@pytest.fixture
def double_fork(s7):
    """S7 with a second fork in the cell {p, a, m, t}."""
    return fork_at(s7, P)


@pytest.fixture
def three_forks():
    """grid(2,2) forked at 0, 1 and 2; P contradicts the covering corollary here."""
    return apply_recipe(Recipe(grid=(2, 2), forks=(0, 1, 2)))


@pytest.fixture
def m3():
    return build_lattice([[1, 2, 3], [4], [4], [4], []])


@pytest.fixture
def n5():
    # 0 < 1 < 2 < 4 and 0 < 3 < 4
    return build_lattice([[1, 3], [2], [4], [4], []])


@pytest.fixture
def chain3():
    return build_lattice([[1], [2], []])


@pytest.fixture
def odd_triangle():
    """Three maximal elements pairwise sharing a lower cover."""
    return FinitePoset.from_covers(
        ["u1", "u2", "u3", "v12", "v23", "v13"],
        [("v12", "u1"), ("v12", "u2"), ("v23", "u2"), ("v23", "u3"),
         ("v13", "u1"), ("v13", "u3")],
    )


@pytest.fixture
def pendant_chain():
    """z covered only by the maximal u."""
    return FinitePoset.from_covers(["u", "z"], [("z", "u")])


@pytest.fixture
def diamond_with_child():
    return FinitePoset.from_covers(
        ["u", "x", "y", "z"],
        [("x", "u"), ("y", "u"), ("z", "x"), ("z", "y")],
    )


@pytest.fixture
def antichain4():
    return FinitePoset.from_covers(["a", "b", "c", "d"], [])
