"""
The Swing Lemma decision procedure, its corollary patterns and their oracle sweep.
"""
import logging
from collections import deque
from typing import Dict, List, NamedTuple, Optional, Set, Tuple

import numpy as np

from congruences.coloring import congruence_data
from lattices.cells import boundary_chains
from lattices.core import Edge, Lattice
from shared.errors import CovnewViolation, MaxMismatch
from swing.relations import edge_relations

logger = logging.getLogger(__name__)

MISMATCH_SAMPLE = 10


class Step(NamedTuple):
    """One step of a witness path: the relation used and the edge reached."""
    relation: str
    edge: Edge

    def __str__(self) -> str:
        return f"{self.relation} {self.edge}"


def swing_reachable(lattice: Lattice, u: Edge) -> Set[Edge]:
    """Every V reachable as U (up)* R (down or swing)* V."""
    rel = edge_relations(lattice)
    ups = rel.closure({rel.index[u]}, rel.up)
    return rel.to_edges(rel.closure(ups, rel.descend))


def swing_leq(lattice: Lattice, u: Edge, v: Edge) -> bool:
    """Decide col V <= col U by the Swing Lemma path search."""
    return v in swing_reachable(lattice, u)


def swing_witness(lattice: Lattice, u: Edge, v: Edge) -> Optional[List[Step]]:
    """Shortest normal-form path from U to V, or None.

    The path climbs by up-perspectivities, then descends by down-perspectivities
    and swings with non-increasing tops.
    """
    rel = edge_relations(lattice)
    start = (rel.index[u], 0)
    parent: Dict[Tuple[int, int], Optional[Tuple[Tuple[int, int], str]]] = {start: None}
    queue = deque([start])
    target = rel.index[v]
    found = None
    while queue:
        state = queue.popleft()
        i, phase = state
        if i == target:
            found = state
            break
        moves = []
        if phase == 0:
            moves.extend(((j, 0), "up") for j in rel.up[i])
            moves.append(((i, 1), ""))
        else:
            moves.extend(((j, 1), "down") for j in rel.down[i])
            moves.extend(((j, 1), "swing-in") for j in rel.interior[i])
            moves.extend(((j, 1), "swing-ex") for j in rel.exterior[i])
        for nxt, relation in moves:
            if nxt not in parent:
                parent[nxt] = (state, relation)
                queue.append(nxt)
    if found is None:
        return None

    steps = []
    state = found
    while parent[state] is not None:
        previous, relation = parent[state]
        if relation:
            steps.append(Step(relation, rel.edges[state[0]]))
        state = previous
    steps.reverse()

    tops = [u.top]
    for s in steps:
        if s.relation == "up":
            tops[0] = s.edge.top
        else:
            tops.append(s.edge.top)
    assert all(lattice.le(b, a) for a, b in zip(tops, tops[1:])), f"tops increase along {steps}"
    return steps


def format_witness(u: Edge, steps: List[Step]) -> str:
    return " ".join([str(u)] + [str(s) for s in steps])


def equal_pattern(lattice: Lattice, u: Edge, v: Edge) -> bool:
    """U (up)* S, S interior-swings to T or S = T, T (down)* V."""
    rel = edge_relations(lattice)
    ups = rel.closure({rel.index[u]}, rel.up)
    swung = ups | rel.step(ups, rel.interior)
    return rel.index[v] in rel.closure(swung, rel.down)


def cover_pattern(lattice: Lattice, u: Edge, v: Edge) -> bool:
    """U (up)* R1, R1 in-swing or equal R2, R2 (down)* R3, R3 ex-swing R4, R4 (down)* V."""
    rel = edge_relations(lattice)
    ups = rel.closure({rel.index[u]}, rel.up)
    swung = ups | rel.step(ups, rel.interior)
    lowered = rel.closure(swung, rel.down)
    return rel.index[v] in rel.closure(rel.step(lowered, rel.exterior), rel.down)


def equal_pattern_meet_irreducible(lattice: Lattice, u: Edge, v: Edge) -> bool:
    """For meet-irreducible 0_U: U in-swing or equal T, T (down)* V."""
    rel = edge_relations(lattice)
    i = rel.index[u]
    return rel.index[v] in rel.closure({i} | rel.step({i}, rel.interior), rel.down)


def equal_upper_boundary(lattice: Lattice, u: Edge, v: Edge) -> bool:
    """For U on the upper boundary: U (down)* V."""
    rel = edge_relations(lattice)
    return rel.index[v] in rel.closure({rel.index[u]}, rel.down)


def cover_pattern_meet_irreducible(lattice: Lattice, u: Edge, v: Edge) -> bool:
    """For meet-irreducible 0_U: U (down)* S, S ex-swing T, T (down)* V."""
    rel = edge_relations(lattice)
    lowered = rel.closure({rel.index[u]}, rel.down)
    return rel.index[v] in rel.closure(rel.step(lowered, rel.exterior), rel.down)


class CovnewConfiguration(NamedTuple):
    """Edges topped by t, seen from an upper-left boundary edge U."""
    u: Edge
    s: Edge
    t: Edge
    w: Edge
    top_edges: Tuple[Edge, ...]


def covnew_configurations(lattice: Lattice, u: Edge) -> List[CovnewConfiguration]:
    """Every top t reached as U (down)* S, S ex-swing T, one entry per t."""
    rel = edge_relations(lattice)
    configurations = []
    seen_tops = set()
    for i in sorted(rel.closure({rel.index[u]}, rel.down)):
        if not rel.exterior[i]:
            continue
        s = rel.edges[i]
        if s.top in seen_tops:
            continue
        seen_tops.add(s.top)
        top_edges = tuple(Edge(x, s.top) for x in lattice.lower_covers[s.top])
        w = top_edges[-1] if s == top_edges[0] else top_edges[0]
        t = rel.edges[rel.exterior[i][0]]
        configurations.append(CovnewConfiguration(u, s, t, w, top_edges))
    return configurations


def validate_covnew(lattice: Lattice, u: Edge) -> List[CovnewConfiguration]:
    """Check the three covering equations around every top reached from U.

    With E_1, ..., E_n the edges below t from left to right: col E_1 differs
    from col E_n; the middle edges all have the color of T; col T is covered
    by both col E_1 and col E_n in P.

    Args:
        lattice: Slim rectangular lattice
        u: Edge on the upper-left boundary

    Returns:
        The configurations checked; empty when none applies

    Raises:
        CovnewViolation: With the number of the first failing equation
    """
    data = congruence_data(lattice)
    col, poset = data.coloring, data.poset
    configurations = covnew_configurations(lattice, u)
    for config in configurations:
        first, last = config.top_edges[0], config.top_edges[-1]
        if col[first] == col[last]:
            raise CovnewViolation(1, f"{first} and {last} share color {col[first]}", u)
        for middle in config.top_edges[1:-1]:
            if col[middle] != col[config.t]:
                raise CovnewViolation(
                    2, f"{middle} has color {col[middle]}, T = {config.t} has {col[config.t]}", u
                )
        for extreme in (first, last):
            if not poset.is_cover(col[config.t], col[extreme]):
                raise CovnewViolation(
                    3, f"color of {config.t} is not covered by color of {extreme}", u,
                    strictly_below=poset.lt(col[config.t], col[extreme]),
                )
    return configurations


def upper_boundary_colors(lattice: Lattice) -> Set[int]:
    """Colors of the upper-left and upper-right boundary edges.

    Raises:
        MaxMismatch: If they are not exactly the maximal elements of P
    """
    data = congruence_data(lattice)
    colors = {data.coloring[e] for e in boundary_chains(lattice).upper_edges()}
    maximal = set(data.poset.maximal)
    if colors != maximal:
        raise MaxMismatch(f"upper boundary colors {sorted(colors)} but Max(P) = {sorted(maximal)}")
    return colors


# checks whose false positives strictly below U count as counterexamples
COVERING_CHECKS = ("cover", "cover_meet_irreducible")


class SweepResult(NamedTuple):
    """Pairwise comparison of the edge patterns with the congruence oracle.

    A covering pattern that holds for a pair with col V strictly below col U
    but not covered by it is counted in ``counterexamples``, not in
    ``mismatches``.
    """
    pairs: int
    mismatches: Dict[str, int]
    samples: Dict[str, List[str]]
    counterexamples: Dict[str, int]
    counterexample_samples: Dict[str, List[str]]

    @property
    def ok(self) -> bool:
        return not any(self.mismatches.values())

    def check_ok(self, *names: str) -> bool:
        return not any(self.mismatches[name] for name in names)

    def discovered(self) -> bool:
        return any(self.counterexamples.values())


def oracle_sweep(lattice: Lattice) -> SweepResult:
    """Compare swing_leq and every corollary pattern with the oracle on all edge pairs.

    Returns:
        Mismatch counts per check, with a few sample pairs each
    """
    rel = edge_relations(lattice)
    data = congruence_data(lattice)
    poset = data.poset
    colors = np.array([data.coloring[e] for e in rel.edges], dtype=np.int64)
    upper = set(boundary_chains(lattice).upper_edges())

    names = ("swing", "equal", "cover", "equal_meet_irreducible", "equal_upper_boundary",
             "cover_meet_irreducible")
    mismatches = {name: 0 for name in names}
    counterexamples = {name: 0 for name in COVERING_CHECKS}
    samples: Dict[str, List[str]] = {name: [] for name in names}
    found_samples: Dict[str, List[str]] = {name: [] for name in COVERING_CHECKS}

    def compare(name: str, i: int, reached: Set[int], expected: np.ndarray,
                skipped: Optional[np.ndarray] = None) -> None:
        got = np.zeros(len(rel.edges), dtype=bool)
        got[list(reached)] = True
        wrong = got != expected
        if skipped is not None:
            found = wrong & got & skipped
            counterexamples[name] += int(found.sum())
            for j in np.flatnonzero(found)[: MISMATCH_SAMPLE - len(found_samples[name])]:
                found_samples[name].append(f"{rel.edges[i]} -> {rel.edges[j]}")
            wrong &= ~found
        wrong = np.flatnonzero(wrong)
        mismatches[name] += int(wrong.size)
        for j in wrong[: MISMATCH_SAMPLE - len(samples[name])]:
            samples[name].append(f"{rel.edges[i]} -> {rel.edges[j]}")

    for i, u in enumerate(rel.edges):
        c = colors[i]
        below = poset.leq[colors, c]
        same = colors == c
        covered = poset.cover_matrix[colors, c]
        strictly_below = below & ~same & ~covered

        ups = rel.closure({i}, rel.up)
        compare("swing", i, rel.closure(ups, rel.descend), below)
        equal = rel.closure(ups | rel.step(ups, rel.interior), rel.down)
        compare("equal", i, equal, same)
        compare("cover", i, rel.closure(rel.step(equal, rel.exterior), rel.down), covered,
                strictly_below)

        if lattice.is_meet_irreducible(u.bottom):
            compare("equal_meet_irreducible", i,
                    rel.closure({i} | rel.step({i}, rel.interior), rel.down), same)
            lowered = rel.closure({i}, rel.down)
            compare("cover_meet_irreducible", i,
                    rel.closure(rel.step(lowered, rel.exterior), rel.down), covered,
                    strictly_below)
        if u in upper:
            compare("equal_upper_boundary", i, rel.closure({i}, rel.down), same)

    result = SweepResult(len(rel.edges) ** 2, mismatches, samples, counterexamples, found_samples)
    if not result.ok:
        logger.error(f"Oracle sweep mismatches on {lattice!r}: {mismatches}")
    if result.discovered():
        logger.warning(f"Covering patterns disagree with P on {lattice!r}: {counterexamples}")
    return result
