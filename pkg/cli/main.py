"""
Command-line entry point: gen, check, survey, congruences, swing and render.
"""
import argparse
import json
import logging
import random
import re
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from dotenv import load_dotenv

from cli.checks import run_checks
from cli.inputs import load_input
from cli.survey import SurveyRunner
from congruences.coloring import congruence_data, leq_oracle
from lattices.construct import apply_recipe, random_forks
from lattices.core import Edge, Lattice
from layout.coordinates import coordinates
from layout.render import render_svg, render_tikz
from shared.config import load_config
from shared.errors import BadDims, DanglingCellRef, InputFormatError, SlattError
from shared.logging_config import configure_logging
from shared.models import CheckReport, PosetReport, Recipe, SurveyRecord, SystemConfig
from swing.lemma import (
    cover_pattern,
    equal_pattern,
    format_witness,
    oracle_sweep,
    swing_leq,
    swing_witness,
)
from swing.relations import swing_rel
from swing.trajectories import trajectories

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_THEOREM = 3
EXIT_DISCOVERY = 4


def _write(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {output}")
    else:
        sys.stdout.write(text)


def _dump(model_or_data, output: Optional[str]) -> None:
    if hasattr(model_or_data, "model_dump"):
        model_or_data = model_or_data.model_dump(mode="json", exclude_none=True)
    _write(json.dumps(model_or_data, indent=2) + "\n", output)


def parse_grid(text: str) -> Tuple[int, int]:
    match = re.fullmatch(r"(\d+)x(\d+)", text)
    if not match:
        raise argparse.ArgumentTypeError(f"grid must look like MxN, got {text!r}")
    m, n = int(match.group(1)), int(match.group(2))
    if m < 2 or n < 2:
        raise argparse.ArgumentTypeError(str(BadDims(m, n)))
    return m, n


def cmd_gen(args: argparse.Namespace, config: SystemConfig) -> int:
    """Write a recipe for a grid with listed or randomly drawn forks."""
    forks = args.forks or ""
    if forks.startswith("auto:"):
        try:
            count = int(forks[len("auto:"):])
        except ValueError:
            logger.error(f"--forks auto:K needs an integer K, got {forks!r}")
            return EXIT_USAGE
        recipe = random_forks(args.grid, count, random.Random(args.seed), seed=args.seed)
    else:
        try:
            bottoms = tuple(int(x) for x in forks.split(",") if x.strip())
        except ValueError:
            logger.error(f"--forks must be auto:K or a comma-separated list, got {forks!r}")
            return EXIT_USAGE
        recipe = Recipe(grid=args.grid, forks=bottoms, seed=args.seed)
        try:
            apply_recipe(recipe)
        except DanglingCellRef as e:
            logger.error(str(e))
            return EXIT_USAGE
    _dump(recipe, args.output)
    return EXIT_OK


def _witness_path(base: Path) -> Path:
    return base.with_name(base.stem + ".witness.json")


def _witness_entry(lattice: Lattice, recipe: Optional[Recipe],
                   report: Union[CheckReport, SurveyRecord]) -> Dict[str, Any]:
    entry: Dict[str, Any] = {
        "recipe": recipe.model_dump(mode="json", exclude_none=True) if recipe else None,
        "lattice": lattice.to_spec().model_dump(),
    }
    if report.properties is not None:
        entry["properties"] = report.properties.model_dump()
    if report.witnesses:
        entry["witnesses"] = report.witnesses
    if report.counterexamples:
        entry["counterexamples"] = {
            name: found.model_dump() for name, found in report.counterexamples.items()
        }
    return entry


def cmd_check(args: argparse.Namespace, config: SystemConfig) -> int:
    """Verify one lattice and write its report."""
    lattice, recipe = load_input(args.input)
    report = run_checks(lattice, recipe, verify_oracle=config.survey.verify_oracle)
    _dump(report, args.output)
    if not (report.theorem_failed() or report.discovered()):
        return EXIT_FAILURE if report.failures else EXIT_OK

    path = _witness_path(Path(args.output) if args.output else Path(args.input))
    _dump(_witness_entry(lattice, recipe, report), str(path))
    if report.theorem_failed():
        logger.error(f"IMPLEMENTATION BUG OR DISCOVERY: property failure, witness in {path}")
        return EXIT_THEOREM
    if report.failures:
        return EXIT_FAILURE
    logger.error(f"DISCOVERY: covering corollaries contradicted by P, witness in {path}")
    return EXIT_DISCOVERY


def cmd_survey(args: argparse.Namespace, config: SystemConfig) -> int:
    """Verify the whole corpus."""
    corpus = config.corpus
    for name in ("max_m", "max_n", "max_forks", "random_count"):
        value = getattr(args, name)
        if value is not None:
            setattr(corpus, name, value)
    if args.verify_oracle is not None:
        config.survey.verify_oracle = args.verify_oracle

    report = SurveyRunner(config).run(jobs=args.jobs)
    output = args.output or config.survey.output
    _dump(report, output)
    summary = report.summary
    logger.info(
        f"Survey: {summary.passed}/{summary.recipes} passed,"
        f" {summary.theorem_failures} property failures, {summary.discoveries} discoveries"
    )

    flagged = [r for r in report.records if r.theorem_failed() or r.discovered()]
    if flagged:
        path = _witness_path(Path(output))
        _dump([
            dict(_witness_entry(apply_recipe(r.recipe), r.recipe, r), label=r.recipe.label())
            for r in flagged
        ], str(path))
        logger.error(f"IMPLEMENTATION BUG OR DISCOVERY: {len(flagged)} recipe(s), witnesses in {path}")

    if summary.theorem_failures:
        return EXIT_THEOREM
    if summary.failed:
        return EXIT_FAILURE
    return EXIT_DISCOVERY if summary.discoveries else EXIT_OK


def cmd_congruences(args: argparse.Namespace, config: SystemConfig) -> int:
    """Write P and the edge coloring."""
    lattice, _ = load_input(args.input)
    data = congruence_data(lattice)
    poset = data.poset
    report = PosetReport(
        elements=len(poset),
        leq=poset.leq.astype(int).tolist(),
        covers=list(poset.covers),
        maximal=list(poset.maximal),
        col={str(edge): index for edge, index in sorted(data.coloring.items())},
    )
    _dump(report, args.output)
    return EXIT_OK


def cmd_swing(args: argparse.Namespace, config: SystemConfig) -> int:
    """Query the swing relations for one pair, or sweep all pairs."""
    lattice, _ = load_input(args.input)
    if args.verify_oracle:
        sweep = oracle_sweep(lattice)
        _dump({"pairs": sweep.pairs, "mismatches": sweep.mismatches,
               "counterexamples": sweep.counterexamples, "samples": sweep.samples,
               "counterexample_samples": sweep.counterexample_samples}, args.output)
        return EXIT_OK if sweep.ok else EXIT_FAILURE

    if args.pair:
        u, v = (Edge.parse(text) for text in args.pair)
        for edge in (u, v):
            if not lattice.is_edge(edge):
                raise InputFormatError(f"{edge} is not an edge of the lattice")
        result = {
            "u": str(u),
            "v": str(v),
            "swing_leq": swing_leq(lattice, u, v),
            "oracle": leq_oracle(lattice, u, v),
            "swing": swing_rel(lattice, u, v).value,
            "equal": equal_pattern(lattice, u, v),
            "cover": cover_pattern(lattice, u, v),
        }
        if args.witness:
            steps = swing_witness(lattice, u, v)
            result["witness"] = format_witness(u, steps) if steps is not None else None
        _dump(result, args.output)
        return EXIT_OK

    _dump([
        {
            "edges": [str(e) for e in t.edges],
            "top": str(t.top),
            "kinds": [kind.value for kind in t.kinds],
        }
        for t in trajectories(lattice)
    ], args.output)
    return EXIT_OK


def cmd_render(args: argparse.Namespace, config: SystemConfig) -> int:
    """Draw the C1-diagram as SVG or TikZ."""
    lattice, _ = load_input(args.input)
    layout = coordinates(lattice)
    renderer = render_svg if args.format == "svg" else render_tikz
    _write(renderer(lattice, layout, config.render, colors=args.colors,
                    trajectories=args.trajectories), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slatt",
        description="Slim rectangular lattices, their congruences and C1-diagrams.",
    )
    parser.add_argument("--config", help="Configuration file (default: $SLATT_CONFIG or config.yaml)")
    parser.add_argument("--log-level", help="Override the configured log level")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="write a recipe")
    gen.add_argument("--grid", type=parse_grid, required=True, help="grid dimensions MxN")
    gen.add_argument("--forks", default="", help="auto:K or a comma-separated list of cell bottoms")
    gen.add_argument("--seed", type=int, default=None, help="seed for auto forks")
    gen.add_argument("-o", "--output")
    gen.set_defaults(handler=cmd_gen)

    check = commands.add_parser("check", help="verify one recipe or lattice")
    check.add_argument("input")
    check.add_argument("-o", "--output")
    check.set_defaults(handler=cmd_check)

    survey = commands.add_parser("survey", help="verify the whole corpus")
    survey.add_argument("--max-m", type=int, dest="max_m")
    survey.add_argument("--max-n", type=int, dest="max_n")
    survey.add_argument("--max-forks", type=int, dest="max_forks")
    survey.add_argument("--random-count", type=int, dest="random_count")
    survey.add_argument("--jobs", type=int, help="worker processes (default: $SLATT_JOBS or config)")
    survey.add_argument("--verify-oracle", action=argparse.BooleanOptionalAction, default=None)
    survey.add_argument("-o", "--output")
    survey.set_defaults(handler=cmd_survey)

    congruences = commands.add_parser("congruences", help="write P and the edge colors")
    congruences.add_argument("input")
    congruences.add_argument("-o", "--output")
    congruences.set_defaults(handler=cmd_congruences)

    swing = commands.add_parser("swing", help="swing relations and the oracle sweep")
    swing.add_argument("input")
    swing.add_argument("--pair", nargs=2, metavar=("U", "V"), help="edges as bottom-top")
    swing.add_argument("--verify-oracle", action="store_true")
    swing.add_argument("--witness", action="store_true")
    swing.add_argument("-o", "--output")
    swing.set_defaults(handler=cmd_swing)

    render = commands.add_parser("render", help="draw the C1-diagram")
    render.add_argument("input")
    render.add_argument("--format", choices=("svg", "tikz"), default="svg")
    render.add_argument("--colors", action="store_true")
    render.add_argument("--trajectories", action="store_true")
    render.add_argument("-o", "--output")
    render.set_defaults(handler=cmd_render)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit code."""
    load_dotenv()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    try:
        config = load_config(args.config)
    except SlattError as e:
        logger.error(str(e))
        return EXIT_USAGE
    if args.log_level:
        config.logging.level = args.log_level
    configure_logging(config.logging)

    try:
        return args.handler(args, config)
    except (InputFormatError, BadDims, DanglingCellRef) as e:
        logger.error(f"Invalid input: {e}")
        return EXIT_USAGE
    except SlattError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE if args.command != "survey" else EXIT_FAILURE
