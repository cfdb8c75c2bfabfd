"""
Corpus survey runner.
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, List, Optional, Tuple

import structlog

from cli.checks import run_checks
from lattices.construct import apply_recipe, corpus_recipes
from shared.errors import SlattError
from shared.models import Recipe, SurveyRecord, SurveyReport, SurveySummary, SystemConfig

logger = logging.getLogger(__name__)
events = structlog.get_logger(__name__)


def check_recipe(task: Tuple[Recipe, bool, bool]) -> SurveyRecord:
    """Build and verify one recipe; errors are recorded, never raised."""
    recipe, verify_oracle, record_timing = task
    started = time.perf_counter()
    try:
        lattice = apply_recipe(recipe)
        report = run_checks(lattice, recipe, verify_oracle=verify_oracle)
        record = SurveyRecord(
            recipe=recipe,
            n=report.n,
            p_size=report.p_size,
            valid=report.valid.valid,
            properties=report.properties,
            oracle=report.oracle,
            corollaries=report.corollaries,
            covnew=report.covnew,
            lemmas=report.lemmas,
            layout=report.layout,
            witnesses=report.witnesses if report.theorem_failed() else None,
            counterexamples=report.counterexamples,
            error="; ".join(report.failures) or None,
        )
    except SlattError as e:
        logger.error(f"Failed to check recipe {recipe.label()}: {e}")
        record = SurveyRecord(recipe=recipe, n=0, valid=False, error=f"{type(e).__name__}: {e}")
    if record_timing:
        record.elapsed_ms = round((time.perf_counter() - started) * 1000, 3)
    return record


class SurveyRunner:
    """Runs the verification suite over a corpus of recipes."""

    def __init__(self, config: SystemConfig):
        """Initialize the survey runner.

        Args:
            config: System configuration; corpus and survey sections are used
        """
        self.config = config

    def recipes(self) -> List[Recipe]:
        return corpus_recipes(self.config.corpus)

    def bounds(self) -> Dict[str, int]:
        corpus = self.config.corpus
        return {
            "max_m": corpus.max_m,
            "max_n": corpus.max_n,
            "max_forks": corpus.max_forks,
            "random_count": corpus.random_count,
            "random_seed_base": corpus.random_seed_base,
            "random_max_m": corpus.random_max_m,
            "random_max_n": corpus.random_max_n,
            "random_max_forks": corpus.random_max_forks,
        }

    def run(self, recipes: Optional[Iterable[Recipe]] = None, jobs: Optional[int] = None) -> SurveyReport:
        """Check every recipe and aggregate the records.

        Args:
            recipes: Recipes to check; defaults to the configured corpus
            jobs: Worker processes; defaults to ``survey.jobs``

        Returns:
            Report with records sorted by recipe
        """
        settings = self.config.survey
        recipes = sorted(recipes if recipes is not None else self.recipes(), key=Recipe.sort_key)
        jobs = jobs or settings.jobs
        tasks = [(r, settings.verify_oracle, settings.record_timing) for r in recipes]
        logger.info(f"Surveying {len(tasks)} recipes with {jobs} worker(s)")

        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                records = list(pool.map(check_recipe, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
        else:
            records = [check_recipe(task) for task in tasks]

        records.sort(key=lambda record: record.recipe.sort_key())
        for record in records:
            events.debug("survey_record", recipe=record.recipe.label(), n=record.n,
                         p_size=record.p_size, ok=record.ok())
            if not record.ok():
                events.warning("survey_failure", recipe=record.recipe.label(), error=record.error)
            if record.discovered():
                events.error("survey_discovery", recipe=record.recipe.label(),
                             checks=sorted(record.counterexamples))

        summary = SurveySummary(
            recipes=len(records),
            passed=sum(1 for r in records if r.ok()),
            failed=sum(1 for r in records if not r.ok()),
            theorem_failures=sum(1 for r in records if r.theorem_failed()),
            max_elements=max((r.n for r in records), default=0),
            discoveries=sum(1 for r in records if r.discovered()),
        )
        events.info("survey_done", recipes=summary.recipes, passed=summary.passed,
                    failed=summary.failed, theorem_failures=summary.theorem_failures,
                    discoveries=summary.discoveries)
        return SurveyReport(bounds=self.bounds(), records=records, summary=summary)
