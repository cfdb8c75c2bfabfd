"""
Per-lattice verification: validators, the four properties, the oracle sweep and the lemmas.
"""
import logging
from typing import Any, Callable, Dict, Optional

from congruences.coloring import congruence_data
from lattices.cells import boundary_chains, four_cells
from lattices.core import Lattice
from lattices.validators import validate_rectangular, validate_semimodular, validate_slim
from layout.coordinates import coordinates, slope_class, validate_c1
from posets.crown import four_crown_two_pendant
from posets.lemmas import (
    boundary_partition_check,
    cover_realization_check,
    lemma_application_check,
    lemma_descent_side_check,
    lemma_disj_check,
    lemma_disjoint_check,
    maximal_cover_witnesses,
)
from posets.properties import maximal_cover_property, no_child_property, partition_property
from shared.errors import CovnewViolation, MaxMismatch, SlattError
from shared.models import CheckReport, Counterexample, PropertyReport, Recipe, ValidityReport
from swing.lemma import oracle_sweep, upper_boundary_colors, validate_covnew
from swing.trajectories import edge_classes, trajectories

logger = logging.getLogger(__name__)


def colors_constant_on_trajectories(lattice: Lattice) -> bool:
    col = congruence_data(lattice).coloring
    return all(len({col[e] for e in t.edges}) == 1 for t in trajectories(lattice))


LEMMAS: Dict[str, Callable[[Lattice], bool]] = {
    "disjoint": lemma_disjoint_check,
    "application": lemma_application_check,
    "disj": lemma_disj_check,
    "boundary_partition": boundary_partition_check,
    "descent_side": lemma_descent_side_check,
    "maximal_cover_witnesses": maximal_cover_witnesses,
    "colors_on_trajectories": colors_constant_on_trajectories,
    "cover_realization": cover_realization_check,
}


def check_validity(lattice: Lattice) -> ValidityReport:
    """Run the validators in order and stop at the first that fails.

    The slimness tests assume a semimodular lattice, so they only run once
    semimodularity holds; rectangularity is checked last.

    Raises:
        MethodsDisagree: If the two slimness tests disagree
    """
    report = ValidityReport()
    semimodular = validate_semimodular(lattice)
    report.semimodular = semimodular.ok
    if not semimodular.ok:
        report.diagnosis = f"not semimodular: {semimodular.reason}"
        return report

    slim = validate_slim(lattice)
    report.slim = slim.ok
    if not slim.ok:
        report.diagnosis = f"not slim: {slim.reason}"
        return report

    try:
        report.corners = validate_rectangular(lattice)
        four_cells(lattice)
        boundary_chains(lattice)
    except SlattError as e:
        report.diagnosis = f"not rectangular: {e}"
    else:
        report.rectangular = True
    return report


def run_checks(lattice: Lattice, recipe: Optional[Recipe] = None,
               verify_oracle: bool = True) -> CheckReport:
    """Verify one lattice end to end.

    Args:
        lattice: Lattice to verify
        recipe: Recipe it was built from, if any
        verify_oracle: Run the pairwise oracle sweep

    Returns:
        Report; ``failures`` lists every check that did not hold and
        ``counterexamples`` the covering corollaries contradicted by P
    """
    failures = []
    try:
        validity = check_validity(lattice)
    except SlattError as e:
        logger.error(f"Validator failure on {lattice!r}: {e}")
        return CheckReport(recipe=recipe, n=lattice.n,
                           valid=ValidityReport(diagnosis=str(e)), failures=[f"validators: {e}"])
    report = CheckReport(recipe=recipe, n=lattice.n, valid=validity)
    if not validity.valid:
        logger.info(f"Input is not slim rectangular: {validity.diagnosis}")
        return report

    poset = congruence_data(lattice).poset
    report.p_size = len(poset)
    partition = partition_property(poset)
    maximal_cover = maximal_cover_property(poset)
    no_child = no_child_property(poset)
    crown = four_crown_two_pendant(poset)
    report.properties = PropertyReport(
        partition=partition.holds,
        maximal_cover=maximal_cover.holds,
        no_child=no_child.holds,
        four_crown=crown.holds,
    )
    witnesses: Dict[str, Any] = {}
    for name, verdict in (("partition", partition), ("maximal_cover", maximal_cover),
                          ("no_child", no_child), ("four_crown", crown)):
        if verdict.witness is not None:
            witnesses[name] = verdict.witness
    report.witnesses = witnesses

    counterexamples: Dict[str, Counterexample] = {}
    if verify_oracle:
        sweep = oracle_sweep(lattice)
        report.oracle = sweep.check_ok("swing")
        report.corollaries = sweep.check_ok(
            "equal", "cover", "equal_meet_irreducible", "equal_upper_boundary", "cover_meet_irreducible"
        )
        for name, count in sweep.mismatches.items():
            if count:
                failures.append(f"oracle {name}: {count} mismatches, e.g. {sweep.samples[name][0]}")
        for name, count in sweep.counterexamples.items():
            if count:
                counterexamples[name] = Counterexample(
                    count=count, samples=sweep.counterexample_samples[name]
                )
    try:
        upper_boundary_colors(lattice)
    except MaxMismatch as e:
        report.corollaries = False
        failures.append(f"upper boundary colors: {e}")

    report.covnew = True
    covnew_samples = []
    for edge in boundary_chains(lattice).upper_left_edges():
        try:
            validate_covnew(lattice, edge)
        except CovnewViolation as e:
            if e.strictly_below and report.oracle is not False:
                covnew_samples.append(f"{edge}: {e}")
                continue
            report.covnew = False
            failures.append(f"covnew at {edge}: {e}")
    if covnew_samples:
        counterexamples["covnew"] = Counterexample(count=len(covnew_samples), samples=covnew_samples)
    report.counterexamples = counterexamples

    lemmas = {}
    for name, check in LEMMAS.items():
        try:
            lemmas[name] = check(lattice)
        except SlattError as e:
            logger.error(f"Lemma check {name} raised: {e}")
            lemmas[name] = False
    report.lemmas = lemmas
    failures.extend(f"lemma {name}" for name, ok in lemmas.items() if not ok)

    try:
        layout = coordinates(lattice)
        verdict = validate_c1(lattice, layout)
        classes = edge_classes(lattice)
        mismatched = [e for e in lattice.edges if slope_class(layout, e) is not classes[e]]
        report.layout = verdict.ok and not mismatched
        if not verdict.ok:
            failures.append(f"layout: {verdict.edge} {verdict.reason}")
        elif mismatched:
            failures.append(f"layout: slope of {mismatched[0]} differs from its trajectory class")
    except SlattError as e:
        report.layout = False
        failures.append(f"layout: {e}")

    report.failures = failures
    if report.theorem_failed():
        logger.error(f"IMPLEMENTATION BUG OR DISCOVERY: property failure on {lattice!r}: {report.properties}")
    elif failures:
        logger.error(f"Verification failures on {lattice!r}: {failures}")
    if report.discovered():
        logger.error(f"DISCOVERY: covering corollaries contradicted by P on {lattice!r}: "
                     f"{sorted(counterexamples)}")
    return report
