"""
Tests for grids, fork insertion, recipes and the corpus.
"""
import random

import pytest

from conftest import GRID33_TOP_CELL, P
from lattices.cells import boundary_chains, four_cells
from lattices.construct import (
    apply_recipe,
    cell_bottoms,
    corpus_recipes,
    enumerate_corpus,
    fork_at,
    grid,
    insert_fork,
    random_forks,
    random_recipe,
)
from lattices.core import FourCell
from lattices.validators import validate_rectangular, validate_semimodular, validate_slim
from posets.peaks import peak_s7_find
from shared.errors import BadDims, DanglingCellRef, NotACell
from shared.models import CorpusSection, Recipe


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (4, 4)])
def test_grid_shape(m, n):
    """Test element, edge and cell counts of grids."""
    lattice = grid(m, n)
    assert lattice.n == m * n
    assert len(lattice.edges) == (m - 1) * n + m * (n - 1)
    assert len(four_cells(lattice)) == (m - 1) * (n - 1)
    assert peak_s7_find(lattice) == []


def test_grid_numbering():
    """Test the breadth-first numbering of grid(2,2)."""
    lattice = grid(2, 2)
    assert lattice.upper_covers == ((1, 2), (3,), (3,), ())


@pytest.mark.parametrize("m,n", [(1, 3), (3, 1), (0, 0)])
def test_grid_bad_dims(m, n):
    """Test rejection of dimensions below 2."""
    with pytest.raises(BadDims):
        grid(m, n)


def test_fork_into_grid22_gives_s7(s7):
    """Test that one fork into the square gives S7 with one peak."""
    assert s7.n == 7
    peaks = peak_s7_find(s7)
    assert len(peaks) == 1
    assert tuple(peaks[0]) == tuple(range(7))


def test_fork_into_top_cell_of_grid33(forked33):
    """Test the legs of a fork into the top cell of grid(3,3)."""
    assert forked33.n == 14
    chains = boundary_chains(forked33)
    assert len(chains.left) - 1 == 5
    assert len(chains.right) - 1 == 5
    assert len(peak_s7_find(forked33)) == 1
    assert validate_semimodular(forked33).ok
    assert validate_slim(forked33).ok


def test_double_fork(double_fork):
    """Test a second fork into a cell of S7."""
    assert double_fork.n == 11
    assert len(peak_s7_find(double_fork)) == 2
    assert validate_semimodular(double_fork).ok
    assert validate_slim(double_fork).ok
    validate_rectangular(double_fork)


def test_insert_fork_rejects_non_cells(s7):
    """Test that a non-consecutive or wrong-top cell is refused."""
    with pytest.raises(NotACell):
        insert_fork(s7, FourCell(0, 1, 2, 6))
    with pytest.raises(NotACell):
        insert_fork(s7, FourCell(1, 4, 3, 6))


def test_fork_at_dangling(s7):
    """Test fork references to elements with fewer than two covers."""
    with pytest.raises(DanglingCellRef) as excinfo:
        fork_at(s7, 3, step=2)
    assert excinfo.value.step == 2
    with pytest.raises(DanglingCellRef):
        fork_at(s7, 99)


def test_apply_recipe_reports_failing_step():
    """Test that the first dangling fork is named by its index."""
    with pytest.raises(DanglingCellRef) as excinfo:
        apply_recipe(Recipe(grid=(2, 2), forks=(0, 5)))
    assert excinfo.value.step == 1


def test_apply_recipe_is_reproducible():
    """Test that replaying a recipe gives identical cover lists."""
    recipe = Recipe(grid=(3, 3), forks=(GRID33_TOP_CELL, 0))
    assert apply_recipe(recipe).upper_covers == apply_recipe(recipe).upper_covers


def test_cell_bottoms(s7):
    """Test cell bottoms in id order."""
    assert cell_bottoms(s7) == [0, P, 2]
    assert cell_bottoms(grid(3, 3)) == [0, 1, 2, GRID33_TOP_CELL]


def test_enumerate_corpus_small():
    """Test corpus sizes and order for small bounds."""
    assert list(enumerate_corpus(2, 2, 0)) == [Recipe(grid=(2, 2))]
    assert list(enumerate_corpus(2, 2, 1)) == [Recipe(grid=(2, 2)), Recipe(grid=(2, 2), forks=(0,))]
    # one plain S7 plus one per cell of S7
    assert len(list(enumerate_corpus(2, 2, 2))) == 5


def test_enumerate_corpus_grid33():
    """Test that grid(3,3) with one fork yields five recipes."""
    recipes = [r for r in enumerate_corpus(3, 3, 1) if r.grid == (3, 3)]
    assert [r.forks for r in recipes] == [(), (0,), (1,), (2,), (GRID33_TOP_CELL,)]


def test_enumerate_corpus_all_valid():
    """Test that every corpus lattice passes the validators."""
    for recipe in enumerate_corpus(3, 3, 1):
        lattice = apply_recipe(recipe)
        assert validate_semimodular(lattice).ok, recipe.label()
        assert validate_slim(lattice).ok, recipe.label()
        validate_rectangular(lattice)


def test_random_recipe_is_seeded():
    """Test that the same seed gives the same recipe."""
    assert random_recipe(7) == random_recipe(7)
    recipe = random_recipe(7, max_m=3, max_n=3, max_forks=2)
    assert 2 <= recipe.grid[0] <= 3 and 2 <= recipe.grid[1] <= 3
    assert len(recipe.forks) <= 2
    assert recipe.seed == 7
    apply_recipe(recipe)


def test_random_forks_count():
    """Test that random forks always name an existing cell."""
    recipe = random_forks((2, 3), 3, random.Random(0))
    assert len(recipe.forks) == 3
    assert apply_recipe(recipe).n > 6


def test_corpus_recipes_sorted():
    """Test that exhaustive and random recipes come out sorted."""
    settings = CorpusSection(max_m=2, max_n=3, max_forks=1, random_count=3,
                             random_max_m=3, random_max_n=3, random_max_forks=1)
    recipes = corpus_recipes(settings)
    assert len(recipes) == 2 + 3 + 3
    assert recipes == sorted(recipes, key=Recipe.sort_key)
    assert sum(1 for r in recipes if r.seed is not None) == 3


def test_recipe_label():
    """Test the compact recipe name."""
    assert Recipe(grid=(3, 3), forks=(4, 7)).label() == "3x3+[4,7]"
    assert Recipe(grid=(2, 2), seed=5).label() == "2x2@5"
