"""
Grids, fork insertions and the reproducible corpus of slim rectangular lattices.
"""
import logging
import random
from collections import deque
from typing import Dict, Hashable, Iterator, List, Optional, Tuple

from lattices.core import FourCell, Lattice, build_lattice
from shared.errors import BadDims, DanglingCellRef, NotACell
from shared.models import CorpusSection, Recipe

logger = logging.getLogger(__name__)

Covers = Dict[Hashable, List[Hashable]]


def _renumber(upper_covers: Covers, bottom: Hashable) -> List[List[int]]:
    """Breadth-first from the bottom, upper covers left to right."""
    index: Dict[Hashable, int] = {bottom: 0}
    queue = deque([bottom])
    while queue:
        x = queue.popleft()
        for y in upper_covers[x]:
            if y not in index:
                index[y] = len(index)
                queue.append(y)

    renumbered: List[List[int]] = [[] for _ in index]
    for x, i in index.items():
        renumbered[i] = [index[y] for y in upper_covers[x]]
    return renumbered


def grid(m: int, n: int) -> Lattice:
    """Direct product of an m-element and an n-element chain.

    Element (i, j) has upper covers (i + 1, j) on the left and (i, j + 1) on
    the right.

    Raises:
        BadDims: If m or n is below 2
    """
    if m < 2 or n < 2:
        raise BadDims(m, n)
    covers: Covers = {}
    for i in range(m):
        for j in range(n):
            ups = []
            if i + 1 < m:
                ups.append((i + 1, j))
            if j + 1 < n:
                ups.append((i, j + 1))
            covers[(i, j)] = ups
    return build_lattice(_renumber(covers, (0, 0)))


def cell_bottoms(lattice: Lattice) -> List[int]:
    """Elements that are the bottom of a 4-cell, in id order."""
    return [x for x in range(lattice.n) if len(lattice.upper_covers[x]) >= 2]


def _check_cell(lattice: Lattice, cell: FourCell) -> None:
    o, a, b, t = cell
    ups = lattice.upper_covers[o] if 0 <= o < lattice.n else ()
    consecutive = any(pair == (a, b) for pair in zip(ups, ups[1:]))
    if not consecutive:
        raise NotACell(f"{a} and {b} are not consecutive upper covers of {o}")
    if lattice.join[a, b] != t or not (lattice.covers(a, t) and lattice.covers(b, t)):
        raise NotACell(f"{t} is not the join covering both {a} and {b}")


def _leg(lattice: Lattice, covers: Covers, cell: FourCell, side: str) -> int:
    """Subdivide the staircase below one side of ``cell`` and return its length."""
    if side == "left":
        edge, step = (cell.bottom, cell.left), -1
    else:
        edge, step = (cell.bottom, cell.right), 1
    prev: Hashable = ("fork", "m")
    length = 0
    while True:
        u, v = edge
        length += 1
        x = (side, length)
        covers[x] = [v, prev] if side == "left" else [prev, v]
        covers[u] = [x if y == v else y for y in covers[u]]
        prev = x

        # the next cell has top v and u as its right (left) lower cover
        lows = lattice.lower_covers[v]
        k = lows.index(u) + step
        if not 0 <= k < len(lows):
            return length
        c = lows[k]
        d = int(lattice.meet[c, u])
        if not (lattice.covers(d, c) and lattice.covers(d, u)):
            logger.warning(f"Region below {v} between {c} and {u} is not a 4-cell; {side} leg stops")
            return length
        edge = (d, c)


def insert_fork(lattice: Lattice, cell: FourCell) -> Lattice:
    """Insert a fork into a 4-cell.

    A middle element below the cell top is added between its left and right
    lower covers, and two legs run down-left and down-right from it, splitting
    every cell they cross. The cell region becomes a peak S7.

    Args:
        lattice: Slim rectangular lattice
        cell: 4-cell of ``lattice``

    Returns:
        The extended lattice, canonically renumbered

    Raises:
        NotACell: If ``cell`` is not a 4-cell of ``lattice``
    """
    _check_cell(lattice, cell)
    covers: Covers = {x: list(ups) for x, ups in enumerate(lattice.upper_covers)}
    covers[("fork", "m")] = [cell.top]
    left = _leg(lattice, covers, cell, "left")
    right = _leg(lattice, covers, cell, "right")

    forked = build_lattice(_renumber(covers, lattice.bottom))
    logger.debug(
        f"Fork into cell {tuple(cell)}: legs {left}/{right}, {lattice.n} -> {forked.n} elements"
    )
    return forked


def fork_at(lattice: Lattice, bottom: int, step: int = 0) -> Lattice:
    """Insert a fork into the 4-cell whose bottom is ``bottom``.

    Raises:
        DanglingCellRef: If no 4-cell has that bottom
    """
    if not 0 <= bottom < lattice.n or len(lattice.upper_covers[bottom]) < 2:
        raise DanglingCellRef(step, bottom)
    a, b = lattice.upper_covers[bottom][:2]
    return insert_fork(lattice, FourCell(bottom, a, b, int(lattice.join[a, b])))


def apply_recipe(recipe: Recipe) -> Lattice:
    """Replay a recipe: the grid, then each fork in order.

    Raises:
        BadDims: For grid dimensions below 2
        DanglingCellRef: With the index of the first fork naming no cell
    """
    lattice = grid(*recipe.grid)
    for step, bottom in enumerate(recipe.forks):
        lattice = fork_at(lattice, bottom, step)
    return lattice


def _fork_sequences(lattice: Lattice, prefix: Tuple[int, ...],
                    remaining: int) -> Iterator[Tuple[int, ...]]:
    yield prefix
    if remaining == 0:
        return
    for bottom in cell_bottoms(lattice):
        yield from _fork_sequences(fork_at(lattice, bottom), prefix + (bottom,), remaining - 1)


def enumerate_corpus(max_m: int = 4, max_n: int = 4, max_forks: int = 2) -> Iterator[Recipe]:
    """Every grid up to max_m x max_n with every fork sequence up to max_forks.

    Recipes come grid by grid (m, then n); within a grid, fork sequences are
    listed depth-first with cell bottoms in increasing order.
    """
    for m in range(2, max_m + 1):
        for n in range(2, max_n + 1):
            for forks in _fork_sequences(grid(m, n), (), max_forks):
                yield Recipe(grid=(m, n), forks=forks)


def random_forks(grid_dims: Tuple[int, int], count: int, rng: random.Random,
                 seed: Optional[int] = None) -> Recipe:
    """Draw ``count`` forks uniformly over the cells available at each step."""
    lattice = grid(*grid_dims)
    forks = []
    for _ in range(count):
        bottom = rng.choice(cell_bottoms(lattice))
        forks.append(bottom)
        lattice = fork_at(lattice, bottom)
    return Recipe(grid=grid_dims, forks=tuple(forks), seed=seed)


def random_recipe(seed: int, max_m: int = 6, max_n: int = 6, max_forks: int = 4) -> Recipe:
    """Seeded random recipe; the same seed always gives the same recipe."""
    rng = random.Random(seed)
    m = rng.randint(2, max_m)
    n = rng.randint(2, max_n)
    count = rng.randint(0, max_forks)
    return random_forks((m, n), count, rng, seed=seed)


def corpus_recipes(settings: CorpusSection) -> List[Recipe]:
    """Exhaustive corpus followed by the seeded random recipes, sorted."""
    recipes = list(enumerate_corpus(settings.max_m, settings.max_n, settings.max_forks))
    for k in range(settings.random_count):
        recipes.append(random_recipe(
            settings.random_seed_base + k,
            settings.random_max_m,
            settings.random_max_n,
            settings.random_max_forks,
        ))
    recipes.sort(key=Recipe.sort_key)
    logger.info(f"Corpus holds {len(recipes)} recipes")
    return recipes
