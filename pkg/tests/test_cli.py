"""
Tests for the command-line surface and the corpus survey.
"""
import json
import os

import pytest
import yaml

from cli.checks import LEMMAS, check_validity, run_checks
from cli.inputs import load_input, parse_input
from cli.main import EXIT_DISCOVERY, EXIT_FAILURE, EXIT_OK, EXIT_THEOREM, EXIT_USAGE, main
from cli.survey import SurveyRunner, check_recipe
from posets.properties import PropertyVerdict
from shared.errors import InputFormatError
from shared.models import Recipe, SystemConfig

SMALL_CORPUS = {
    "corpus": {
        "max_m": 2,
        "max_n": 3,
        "max_forks": 1,
        "random_count": 2,
        "random_max_m": 3,
        "random_max_n": 3,
        "random_max_forks": 1,
    },
    "survey": {"jobs": 1},
    "logging": {"level": "WARNING"},
}


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text(yaml.safe_dump(SMALL_CORPUS), encoding="utf-8")
    return str(path)


@pytest.fixture
def run(config_file):
    def _run(*argv):
        return main(["--config", config_file, *argv])
    return _run


def _write_json(path, data):
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


@pytest.fixture
def s7_file(tmp_path):
    return _write_json(tmp_path / "s7.json", {"grid": [2, 2], "forks": [0]})


class TestInputs:
    """Recipe and lattice JSON."""

    def test_parse_recipe(self):
        lattice, recipe = parse_input({"grid": [2, 2], "forks": [0]})
        assert lattice.n == 7
        assert recipe == Recipe(grid=(2, 2), forks=(0,))

    def test_parse_lattice(self):
        lattice, recipe = parse_input({"n": 3, "upper_covers": [[1], [2], []]})
        assert lattice.n == 3 and recipe is None

    @pytest.mark.parametrize("data", [
        [1, 2],
        {"nodes": []},
        {"grid": [2, 2], "forks": [0], "extra": 1},
        {"grid": "2x2"},
    ])
    def test_parse_rejects(self, data):
        with pytest.raises(InputFormatError):
            parse_input(data)

    def test_load_missing_and_malformed(self, tmp_path):
        with pytest.raises(InputFormatError):
            load_input(tmp_path / "missing.json")
        bad = tmp_path / "bad.json"
        bad.write_text("{not json", encoding="utf-8")
        with pytest.raises(InputFormatError):
            load_input(bad)


class TestGen:
    def test_listed_forks(self, run, tmp_path):
        out = tmp_path / "recipe.json"
        assert run("gen", "--grid", "3x3", "--forks", "4,0", "-o", str(out)) == EXIT_OK
        assert json.loads(out.read_text()) == {"grid": [3, 3], "forks": [4, 0]}

    def test_auto_forks_are_seeded(self, run, tmp_path):
        first, second = tmp_path / "a.json", tmp_path / "b.json"
        assert run("gen", "--grid", "3x2", "--forks", "auto:3", "--seed", "11", "-o", str(first)) == EXIT_OK
        assert run("gen", "--grid", "3x2", "--forks", "auto:3", "--seed", "11", "-o", str(second)) == EXIT_OK
        assert first.read_text() == second.read_text()
        data = json.loads(first.read_text())
        assert len(data["forks"]) == 3 and data["seed"] == 11

    @pytest.mark.parametrize("argv", [
        ("gen", "--grid", "1x3"),
        ("gen", "--grid", "three"),
        ("gen", "--grid", "2x2", "--forks", "5"),
        ("gen", "--grid", "2x2", "--forks", "auto:x"),
        ("gen", "--grid", "2x2", "--forks", "a,b"),
    ])
    def test_usage_errors(self, run, argv):
        assert run(*argv) == EXIT_USAGE


class TestCheck:
    def test_s7_passes(self, run, s7_file, tmp_path):
        out = tmp_path / "report.json"
        assert run("check", s7_file, "-o", str(out)) == EXIT_OK
        report = json.loads(out.read_text())
        assert report["schema_version"] == 1
        assert report["n"] == 7
        assert report["p_size"] == 3
        assert all(report["properties"].values())
        assert report["oracle"] and report["corollaries"] and report["covnew"] and report["layout"]
        assert all(report["lemmas"].values())
        assert report["failures"] == []
        assert report["witnesses"]["partition"] == [[0], [1]]

    def test_not_slim_is_diagnosed(self, run, tmp_path):
        path = _write_json(tmp_path / "m3.json", {"n": 5, "upper_covers": [[1, 2, 3], [4], [4], [4], []]})
        out = tmp_path / "report.json"
        assert run("check", path, "-o", str(out)) == EXIT_OK
        report = json.loads(out.read_text())
        assert report["valid"]["slim"] is False
        assert report["valid"]["diagnosis"].startswith("not slim")
        assert "properties" not in report

    def test_not_semimodular_stops_early(self, run, tmp_path):
        path = _write_json(tmp_path / "nsm.json",
                           {"n": 6, "upper_covers": [[1, 2, 3], [4], [4], [5], [5], []]})
        out = tmp_path / "report.json"
        assert run("check", path, "-o", str(out)) == EXIT_OK
        report = json.loads(out.read_text())
        assert report["valid"]["semimodular"] is False
        assert report["valid"]["slim"] is False
        assert report["valid"]["diagnosis"].startswith("not semimodular")
        assert report["failures"] == []

    def test_validators_run_in_order(self, m3, n5):
        report = check_validity(n5)
        assert not report.semimodular and not report.slim
        assert report.diagnosis.startswith("not semimodular")
        report = check_validity(m3)
        assert report.semimodular and not report.slim and not report.rectangular
        assert report.diagnosis.startswith("not slim")

    def test_not_a_lattice(self, run, tmp_path):
        path = _write_json(tmp_path / "bad.json",
                           {"n": 6, "upper_covers": [[1, 2], [3, 4], [3, 4], [5], [5], []]})
        assert run("check", path) == EXIT_USAGE

    def test_malformed_input(self, run, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("[", encoding="utf-8")
        assert run("check", str(path)) == EXIT_USAGE

    def test_property_failure_writes_witness(self, run, s7_file, tmp_path, monkeypatch):
        monkeypatch.setattr("cli.checks.partition_property", lambda poset: PropertyVerdict(False))
        out = tmp_path / "report.json"
        assert run("check", s7_file, "-o", str(out)) == EXIT_THEOREM
        witness = json.loads((tmp_path / "report.witness.json").read_text())
        assert witness["recipe"]["grid"] == [2, 2]
        assert witness["properties"]["partition"] is False
        assert witness["lattice"]["n"] == 7

    def test_verification_failure(self, run, s7_file, monkeypatch):
        monkeypatch.setitem(LEMMAS, "disj", lambda lattice: False)
        assert run("check", s7_file) == EXIT_FAILURE

    def test_covering_counterexample_is_a_discovery(self, run, tmp_path):
        path = _write_json(tmp_path / "forks.json", {"grid": [2, 2], "forks": [0, 1, 2]})
        out = tmp_path / "report.json"
        assert run("check", path, "-o", str(out)) == EXIT_DISCOVERY
        report = json.loads(out.read_text())
        assert report["failures"] == []
        assert all(report["properties"].values())
        assert report["oracle"] is True
        assert report["counterexamples"]["cover"]["count"] > 0
        witness = json.loads((tmp_path / "report.witness.json").read_text())
        assert witness["recipe"]["forks"] == [0, 1, 2]
        assert witness["lattice"]["n"] == 15
        assert witness["counterexamples"]["cover"]["samples"]

    def test_discovery_run_checks(self, three_forks):
        report = run_checks(three_forks, Recipe(grid=(2, 2), forks=(0, 1, 2)))
        assert report.passed()
        assert report.discovered()
        assert report.corollaries is True
        assert "cover" in report.counterexamples


class TestCongruences:
    def test_s7_poset(self, run, s7_file, tmp_path):
        out = tmp_path / "p.json"
        assert run("congruences", s7_file, "-o", str(out)) == EXIT_OK
        report = json.loads(out.read_text())
        assert report["elements"] == 3
        assert report["covers"] == [[2, 0], [2, 1]]
        assert report["maximal"] == [0, 1]
        assert report["leq"] == [[1, 0, 0], [0, 1, 0], [1, 1, 1]]
        assert report["col"]["3-6"] == 1
        assert report["col"]["5-6"] == 0
        assert report["col"]["4-6"] == 2
        assert len(report["col"]) == 9


class TestSwing:
    def test_pair_with_witness(self, run, s7_file, tmp_path):
        out = tmp_path / "pair.json"
        assert run("swing", s7_file, "--pair", "3-6", "2-5", "--witness", "-o", str(out)) == EXIT_OK
        result = json.loads(out.read_text())
        assert result["swing_leq"] is True
        assert result["oracle"] is True
        assert result["swing"] == "none"
        assert result["witness"] == "3-6 swing-ex 4-6 down 2-5"

    def test_swing_kind(self, run, s7_file, tmp_path):
        out = tmp_path / "pair.json"
        assert run("swing", s7_file, "--pair", "3-6", "4-6", "-o", str(out)) == EXIT_OK
        result = json.loads(out.read_text())
        assert result["swing"] == "exterior"
        assert result["cover"] is True
        assert result["equal"] is False

    def test_unknown_edge(self, run, s7_file):
        assert run("swing", s7_file, "--pair", "0-6", "4-6") == EXIT_USAGE

    def test_verify_oracle(self, run, s7_file, tmp_path):
        out = tmp_path / "sweep.json"
        assert run("swing", s7_file, "--verify-oracle", "-o", str(out)) == EXIT_OK
        result = json.loads(out.read_text())
        assert result["pairs"] == 81
        assert not any(result["mismatches"].values())

    def test_trajectories(self, run, s7_file, tmp_path):
        out = tmp_path / "traj.json"
        assert run("swing", s7_file, "-o", str(out)) == EXIT_OK
        found = json.loads(out.read_text())
        assert [t["top"] for t in found] == ["5-6", "4-6", "3-6"]
        assert found[1]["kinds"] == ["normal-down", "steep", "normal-up"]


class TestRender:
    def test_svg_file(self, run, s7_file, tmp_path):
        out = tmp_path / "s7.svg"
        assert run("render", s7_file, "--colors", "-o", str(out)) == EXIT_OK
        assert out.read_text().rstrip().endswith("</svg>")

    def test_tikz_file(self, run, s7_file, tmp_path):
        out = tmp_path / "s7.tex"
        assert run("render", s7_file, "--format", "tikz", "--trajectories", "-o", str(out)) == EXIT_OK
        assert "\\end{tikzpicture}" in out.read_text()


class TestSurvey:
    def test_small_survey(self, run, tmp_path):
        out = tmp_path / "survey.json"
        assert run("survey", "-o", str(out)) == EXIT_OK
        report = json.loads(out.read_text())
        summary = report["summary"]
        assert summary["recipes"] == 7
        assert summary["passed"] == 7
        assert summary["theorem_failures"] == 0
        assert report["bounds"]["max_n"] == 3
        labels = [Recipe.model_validate(r["recipe"]) for r in report["records"]]
        assert labels == sorted(labels, key=Recipe.sort_key)

    def test_flags_override_config(self, run, tmp_path):
        out = tmp_path / "survey.json"
        argv = ("survey", "--max-n", "2", "--max-forks", "0", "--random-count", "0",
                "--no-verify-oracle", "-o", str(out))
        assert run(*argv) == EXIT_OK
        report = json.loads(out.read_text())
        assert report["summary"]["recipes"] == 1
        assert "oracle" not in report["records"][0]

    def test_parallel_matches_serial(self):
        config = SystemConfig(**SMALL_CORPUS)
        runner = SurveyRunner(config)
        serial = runner.run(jobs=1)
        parallel = runner.run(jobs=2)
        assert serial.model_dump() == parallel.model_dump()

    def test_check_recipe_records_errors(self):
        record = check_recipe((Recipe(grid=(2, 2), forks=(3,)), True, True))
        assert not record.ok()
        assert record.error.startswith("DanglingCellRef")
        assert record.elapsed_ms is not None

    def test_run_checks_on_recipe(self, s7):
        report = run_checks(s7, Recipe(grid=(2, 2), forks=(0,)), verify_oracle=False)
        assert report.passed()
        assert report.oracle is None

    def test_property_failure_keeps_witnesses(self, run, tmp_path, monkeypatch):
        monkeypatch.setattr("cli.checks.partition_property",
                            lambda poset: PropertyVerdict(False, [[0, 1]]))
        out = tmp_path / "survey.json"
        assert run("survey", "-o", str(out)) == EXIT_THEOREM
        report = json.loads(out.read_text())
        assert report["summary"]["theorem_failures"] == 7
        assert all(r["witnesses"] == {"partition": [[0, 1]]} for r in report["records"])
        flagged = json.loads((tmp_path / "survey.witness.json").read_text())
        assert len(flagged) == 7
        assert [entry["label"] for entry in flagged] == [
            Recipe.model_validate(r["recipe"]).label() for r in report["records"]
        ]
        assert all(entry["witnesses"]["partition"] == [[0, 1]] for entry in flagged)
        assert all(entry["properties"]["partition"] is False for entry in flagged)

    def test_clean_survey_writes_no_witness(self, run, tmp_path):
        assert run("survey", "-o", str(tmp_path / "survey.json")) == EXIT_OK
        assert not (tmp_path / "survey.witness.json").exists()

    def test_check_recipe_keeps_counterexamples(self):
        record = check_recipe((Recipe(grid=(2, 2), forks=(0, 1, 2)), True, False))
        assert record.ok()
        assert record.discovered()
        assert "cover" in record.counterexamples
        assert record.witnesses is None

    def test_runner_counts_discoveries(self):
        recipes = [Recipe(grid=(2, 2), forks=(0,)), Recipe(grid=(2, 2), forks=(0, 1, 2))]
        report = SurveyRunner(SystemConfig(**SMALL_CORPUS)).run(recipes=recipes)
        assert report.summary.discoveries == 1
        assert report.summary.failed == 0
        assert report.summary.passed == 2


@pytest.mark.slow
def test_default_corpus_survey():
    """Test the full default corpus: no failures, and the known counterexample is flagged."""
    report = SurveyRunner(SystemConfig()).run(jobs=os.cpu_count() or 1)
    summary = report.summary
    assert summary.failed == 0, [r.error for r in report.records if not r.ok()][:5]
    assert summary.theorem_failures == 0
    assert summary.discoveries > 0
    discovered = {r.recipe.label() for r in report.records if r.discovered()}
    assert "2x2+[0,1,2]@67" in discovered
