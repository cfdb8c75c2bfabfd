"""
Cover-preserving embeddings of the four-crown two-pendant poset R.
"""
from typing import Dict, List, Optional, Sequence

from congruences.poset import FinitePoset
from posets.properties import PropertyVerdict

CROWN_TOPS = ("a", "b", "c", "d")

CROWN_COVERS = (
    ("p", "a"), ("p", "b"),
    ("q", "b"), ("q", "c"),
    ("r", "c"), ("r", "d"),
    ("s", "d"), ("s", "a"),
    ("u", "p"), ("u", "r"),
    ("v", "q"), ("v", "s"),
)


def crown_poset_r() -> FinitePoset:
    """The ten-element poset R: four maximal elements, four middles and two pendants."""
    labels = ("a", "b", "c", "d", "p", "q", "r", "s", "u", "v")
    return FinitePoset.from_covers(labels, CROWN_COVERS)


class CoverEmbedding:
    """
    Backtracking search for an injective, order-embedding, cover-preserving map
    of a pattern poset into a target poset, sending the given pattern
    elements to maximal target elements.
    """

    def __init__(self, pattern: FinitePoset, target: FinitePoset, to_maximal: Sequence[int]):
        self._pattern = pattern
        self._target = target
        self._to_maximal = set(to_maximal)
        self._matches: Dict[int, int] = {}
        # maximal elements first, elements with most lower covers last
        self._order: List[int] = sorted(
            range(pattern.k),
            key=lambda x: (x not in self._to_maximal, len(pattern.lower_covers(x)) == 0, x),
        )
        self._target_maximal = set(target.maximal)

    def _candidates(self, x: int) -> List[int]:
        ups, downs = len(self._pattern.upper_covers(x)), len(self._pattern.lower_covers(x))
        used = set(self._matches.values())
        found = []
        for y in range(self._target.k):
            if y in used:
                continue
            if x in self._to_maximal and y not in self._target_maximal:
                continue
            if len(self._target.upper_covers(y)) < ups or len(self._target.lower_covers(y)) < downs:
                continue
            found.append(y)
        return found

    def _is_valid_mapping(self, x: int, y: int) -> bool:
        for x2, y2 in self._matches.items():
            if self._pattern.le(x, x2) != self._target.le(y, y2):
                return False
            if self._pattern.le(x2, x) != self._target.le(y2, y):
                return False
            if self._pattern.is_cover(x, x2) and not self._target.is_cover(y, y2):
                return False
            if self._pattern.is_cover(x2, x) and not self._target.is_cover(y2, y):
                return False
        return True

    def backtrack(self, position: int) -> bool:
        if position == len(self._order):
            return True
        x = self._order[position]
        for y in self._candidates(x):
            if self._is_valid_mapping(x, y):
                self._matches[x] = y
                if self.backtrack(position + 1):
                    return True
                del self._matches[x]
        return False

    def find(self) -> Optional[Dict[int, int]]:
        if self._pattern.k > self._target.k:
            return None
        if self.backtrack(0):
            return dict(self._matches)
        return None


def four_crown_two_pendant(poset: FinitePoset,
                           pattern: Optional[FinitePoset] = None) -> PropertyVerdict:
    """True when R has no cover-preserving embedding into P with its tops in Max(P).

    Args:
        poset: The poset P
        pattern: Replacement for R; its maximal elements must go to Max(P)

    Returns:
        Verdict whose witness maps pattern labels to P indices when an embedding exists
    """
    pattern = pattern or crown_poset_r()
    embedding = CoverEmbedding(pattern, poset, pattern.maximal).find()
    if embedding is None:
        return PropertyVerdict(True)
    return PropertyVerdict(False, {pattern.labels[x]: y for x, y in sorted(embedding.items())})
