"""
Tests for perspectivities, swings, trajectories and the Swing Lemma checks.
"""
import pytest

from congruences.coloring import congruence_data
from congruences.poset import FinitePoset
from lattices.construct import apply_recipe, enumerate_corpus, grid
from lattices.core import Edge
from shared.errors import CovnewViolation
from shared.models import EdgeKind, SwingKind
from swing.lemma import (
    Step,
    cover_pattern,
    cover_pattern_meet_irreducible,
    covnew_configurations,
    equal_pattern,
    equal_pattern_meet_irreducible,
    equal_upper_boundary,
    format_witness,
    oracle_sweep,
    swing_leq,
    swing_reachable,
    swing_witness,
    upper_boundary_colors,
    validate_covnew,
)
from swing.relations import down_transpose, edge_relations, swing_rel, up_transpose
from swing.trajectories import classify_edge, edge_classes, trajectories, trajectory_of

E = Edge.parse


class TestPerspectivities:
    """Up and down perspectivities in S7."""

    def test_up_from_lower_right(self, s7):
        assert up_transpose(s7, E("0-2")) == {E("1-4"), E("3-6")}

    def test_up_from_upper_boundary(self, s7):
        assert up_transpose(s7, E("3-6")) == set()

    def test_down(self, s7):
        assert down_transpose(s7, E("5-6")) == {E("2-4"), E("0-1")}
        assert down_transpose(s7, E("3-6")) == {E("1-4"), E("0-2")}
        assert down_transpose(s7, E("4-6")) == {E("1-3"), E("2-5")}

    def test_down_is_inverse_of_up(self, double_fork):
        for u in double_fork.edges:
            for v in up_transpose(double_fork, u):
                assert u in down_transpose(double_fork, v)

    def test_relation_tables_are_cached(self, s7):
        assert edge_relations(s7) is edge_relations(s7)


class TestSwings:
    """Swings at the top of S7."""

    def test_exterior(self, s7):
        assert swing_rel(s7, E("3-6"), E("4-6")) is SwingKind.EXTERIOR
        assert swing_rel(s7, E("5-6"), E("4-6")) is SwingKind.EXTERIOR

    def test_none_onto_extreme(self, s7):
        assert swing_rel(s7, E("3-6"), E("5-6")) is SwingKind.NONE
        assert swing_rel(s7, E("4-6"), E("3-6")) is SwingKind.NONE

    def test_interior_reflexive(self, s7):
        assert swing_rel(s7, E("4-6"), E("4-6")) is SwingKind.INTERIOR

    def test_different_tops(self, s7):
        assert swing_rel(s7, E("1-4"), E("4-6")) is SwingKind.NONE

    def test_interior_between_middles(self, double_fork):
        top = double_fork.top
        lows = double_fork.lower_covers[top]
        first, second = Edge(lows[1], top), Edge(lows[2], top)
        assert swing_rel(double_fork, first, second) is SwingKind.INTERIOR

    def test_grid_has_no_swings(self):
        lattice = grid(3, 3)
        rel = edge_relations(lattice)
        assert not any(rel.interior) and not any(rel.exterior)


class TestTrajectories:
    """Trajectories and the edge classification."""

    def test_s7_trajectories(self, s7):
        found = trajectories(s7)
        assert [[str(e) for e in t.edges] for t in found] == [
            ["0-1", "2-4", "5-6"],
            ["1-3", "4-6", "2-5"],
            ["3-6", "1-4", "0-2"],
        ]
        assert [t.top_index for t in found] == [2, 1, 0]
        assert found[0].kinds == (EdgeKind.NORMAL_DOWN,) * 3
        assert found[1].kinds == (EdgeKind.NORMAL_DOWN, EdgeKind.STEEP, EdgeKind.NORMAL_UP)
        assert found[2].kinds == (EdgeKind.NORMAL_UP,) * 3
        assert found[1].steep_edges() == (E("4-6"),)
        assert found[1].top == E("4-6")

    def test_trajectories_partition_edges(self, double_fork):
        edges = [e for t in trajectories(double_fork) for e in t.edges]
        assert sorted(edges) == list(double_fork.edges)

    def test_classify_edge(self, s7):
        assert classify_edge(s7, E("4-6")) is EdgeKind.STEEP
        assert classify_edge(s7, E("3-6")) is EdgeKind.NORMAL_UP
        assert classify_edge(s7, E("5-6")) is EdgeKind.NORMAL_DOWN

    def test_steep_edges_are_peak_middles(self, double_fork):
        steep = [e for e, kind in edge_classes(double_fork).items() if kind is EdgeKind.STEEP]
        assert len(steep) == 2
        assert all(e.top == double_fork.top for e in steep)

    def test_grid_has_no_steep_edges(self):
        assert EdgeKind.STEEP not in edge_classes(grid(3, 4)).values()

    def test_trajectory_of(self, s7):
        index = trajectory_of(s7)
        assert index[E("0-1")] == index[E("5-6")] == 0
        assert index[E("4-6")] == 1


class TestSwingLemma:
    """The path search, its witnesses and the corollary patterns."""

    def test_swing_leq(self, s7):
        assert swing_leq(s7, E("3-6"), E("2-5"))
        assert swing_leq(s7, E("3-6"), E("3-6"))
        assert not swing_leq(s7, E("3-6"), E("0-1"))
        assert not swing_leq(s7, E("4-6"), E("3-6"))

    def test_reachable_from_upper_left(self, s7):
        assert swing_reachable(s7, E("3-6")) == {
            E("3-6"), E("1-4"), E("0-2"), E("4-6"), E("1-3"), E("2-5"),
        }

    def test_witness(self, s7):
        steps = swing_witness(s7, E("3-6"), E("2-5"))
        assert steps == [Step("swing-ex", E("4-6")), Step("down", E("2-5"))]
        assert format_witness(E("3-6"), steps) == "3-6 swing-ex 4-6 down 2-5"
        assert swing_witness(s7, E("3-6"), E("0-1")) is None

    def test_witness_climbs_first(self, s7):
        steps = swing_witness(s7, E("0-2"), E("4-6"))
        assert steps[0].relation == "up"
        assert steps[-1] == Step("swing-ex", E("4-6"))

    def test_equal_pattern(self, s7):
        assert equal_pattern(s7, E("3-6"), E("0-2"))
        assert equal_pattern(s7, E("0-2"), E("1-4"))
        assert not equal_pattern(s7, E("3-6"), E("4-6"))

    def test_cover_pattern(self, s7):
        assert cover_pattern(s7, E("3-6"), E("4-6"))
        assert cover_pattern(s7, E("0-1"), E("2-5"))
        assert not cover_pattern(s7, E("3-6"), E("5-6"))
        assert not cover_pattern(s7, E("4-6"), E("1-3"))

    def test_meet_irreducible_variants(self, s7):
        # 3 = a is meet-irreducible
        assert equal_pattern_meet_irreducible(s7, E("3-6"), E("0-2"))
        assert cover_pattern_meet_irreducible(s7, E("3-6"), E("2-5"))
        assert not cover_pattern_meet_irreducible(s7, E("3-6"), E("1-4"))

    def test_upper_boundary_variant(self, s7):
        assert equal_upper_boundary(s7, E("5-6"), E("0-1"))
        assert not equal_upper_boundary(s7, E("5-6"), E("4-6"))

    def test_covnew_on_s7(self, s7):
        configurations = validate_covnew(s7, E("3-6"))
        assert len(configurations) == 1
        config = configurations[0]
        assert config.s == E("3-6")
        assert config.t == E("4-6")
        assert config.w == E("5-6")
        assert config.top_edges == (E("3-6"), E("4-6"), E("5-6"))

    def test_covnew_empty_on_grid(self):
        lattice = grid(3, 3)
        for edge in lattice.edges:
            assert covnew_configurations(lattice, edge) == []

    def test_covnew_reports_equation(self, s7, monkeypatch):
        from congruences import coloring

        data = coloring.congruence_data(s7)
        broken = dict(data.coloring)
        broken[E("5-6")] = broken[E("3-6")]
        monkeypatch.setattr("swing.lemma.congruence_data",
                            lambda lattice: data._replace(coloring=broken))
        with pytest.raises(CovnewViolation) as excinfo:
            validate_covnew(s7, E("3-6"))
        assert excinfo.value.equation == 1
        assert not excinfo.value.strictly_below

    def test_covnew_marks_strictly_below(self, s7, monkeypatch):
        monkeypatch.setattr(FinitePoset, "is_cover", lambda self, i, j: False)
        with pytest.raises(CovnewViolation) as excinfo:
            validate_covnew(s7, E("3-6"))
        assert excinfo.value.equation == 3
        assert excinfo.value.strictly_below

    def test_upper_boundary_colors(self, s7):
        assert upper_boundary_colors(s7) == {0, 1}


CORPUS = list(enumerate_corpus(2, 2, 2)) + list(enumerate_corpus(3, 3, 2))


@pytest.mark.parametrize("recipe", CORPUS, ids=lambda r: r.label())
def test_oracle_sweep_small_corpus(recipe):
    """Test that every pattern agrees with the congruence oracle."""
    result = oracle_sweep(apply_recipe(recipe))
    assert result.ok, result.samples
    assert result.pairs > 0


def test_oracle_sweep_double_fork(double_fork):
    """Test the sweep on a lattice with two peaks under one top."""
    result = oracle_sweep(double_fork)
    assert result.ok, result.samples
    assert set(result.mismatches) == {
        "swing", "equal", "cover", "equal_meet_irreducible",
        "equal_upper_boundary", "cover_meet_irreducible",
    }


class TestCoveringCounterexample:
    """grid(2,2) forked at 0, 1 and 2: an exterior swing lands two colors down."""

    def test_exterior_swing_matches_cover_pattern(self, three_forks):
        assert swing_rel(three_forks, E("9-12"), E("8-12")) is SwingKind.EXTERIOR
        assert cover_pattern(three_forks, E("9-12"), E("8-12"))

    def test_colors_form_a_chain_of_length_two(self, three_forks):
        data = congruence_data(three_forks)
        col, poset = data.coloring, data.poset
        low, mid, high = col[E("8-12")], col[E("7-12")], col[E("9-12")]
        assert poset.is_cover(low, mid) and poset.is_cover(mid, high)
        assert poset.lt(low, high)
        assert not poset.is_cover(low, high)

    def test_sweep_reports_counterexamples(self, three_forks):
        result = oracle_sweep(three_forks)
        assert result.ok, result.samples
        assert result.discovered()
        assert result.counterexamples["cover"] > 0
        assert result.mismatches["cover"] == 0
        assert result.counterexample_samples["cover"]
        assert not result.samples["cover"]

    def test_swing_lemma_still_holds(self, three_forks):
        assert swing_leq(three_forks, E("9-12"), E("8-12"))
        assert not swing_leq(three_forks, E("8-12"), E("9-12"))

