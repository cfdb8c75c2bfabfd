"""
Shared data models for the slim lattice toolkit.
"""
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = 1


class EdgeKind(str, Enum):
    """Slope class of an edge in a C1-diagram."""
    NORMAL_UP = "normal-up"
    NORMAL_DOWN = "normal-down"
    STEEP = "steep"


class SwingKind(str, Enum):
    """Kind of swing between two edges sharing a top."""
    NONE = "none"
    INTERIOR = "interior"
    EXTERIOR = "exterior"


class LatticeSpec(BaseModel):
    """Explicit lattice description: ordered upper covers per element."""
    model_config = ConfigDict(extra="forbid")

    n: int = Field(..., ge=1, description="Number of elements")
    upper_covers: List[List[int]] = Field(
        ..., description="Upper covers of each element, ordered left to right"
    )


class Recipe(BaseModel):
    """Grid dimensions plus an ordered list of fork insertions."""
    model_config = ConfigDict(extra="forbid", frozen=True)

    grid: Tuple[int, int] = Field(..., description="Chain lengths (m, n) of the grid")
    forks: Tuple[int, ...] = Field(
        default=(), description="Bottom element of the forked 4-cell at each step"
    )
    seed: Optional[int] = Field(None, description="Seed the recipe was drawn with")

    def sort_key(self) -> Tuple[int, int, Tuple[int, ...], int]:
        """Key used to order survey records."""
        return (self.grid[0], self.grid[1], self.forks, -1 if self.seed is None else self.seed)

    def label(self) -> str:
        """Compact human-readable name, e.g. ``3x3+[4,7]``."""
        text = f"{self.grid[0]}x{self.grid[1]}"
        if self.forks:
            text += "+[" + ",".join(str(f) for f in self.forks) + "]"
        if self.seed is not None:
            text += f"@{self.seed}"
        return text


class SystemSection(BaseModel):
    """Project identification."""
    name: str = Field("slatt", description="System name")
    version: str = Field("1.0.0", description="System version")


class CorpusSection(BaseModel):
    """Bounds of the exhaustive and random corpus."""
    max_m: int = Field(4, ge=2, description="Largest first grid dimension")
    max_n: int = Field(4, ge=2, description="Largest second grid dimension")
    max_forks: int = Field(2, ge=0, description="Longest fork sequence")
    random_count: int = Field(100, ge=0, description="Number of seeded random recipes")
    random_seed_base: int = Field(1, description="Seed of the first random recipe")
    random_max_m: int = Field(6, ge=2, description="Random recipes: largest m")
    random_max_n: int = Field(6, ge=2, description="Random recipes: largest n")
    random_max_forks: int = Field(4, ge=0, description="Random recipes: most forks")


class SurveySection(BaseModel):
    """Survey execution settings."""
    jobs: int = Field(1, ge=1, description="Worker processes")
    output: str = Field("survey.json", description="Report path")
    verify_oracle: bool = Field(True, description="Run the pairwise oracle sweep")
    record_timing: bool = Field(False, description="Store per-record timings")


class RenderSection(BaseModel):
    """Diagram rendering defaults."""
    scale: int = Field(40, ge=1, description="SVG units per layout unit")
    node_radius: int = Field(5, ge=1, description="SVG node radius")
    stroke: int = Field(2, ge=1, description="Normal edge width")
    steep_stroke: int = Field(5, ge=1, description="Steep edge width")
    palette: List[str] = Field(
        default_factory=lambda: [
            "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
            "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
        ],
        description="Edge tints cycled over P indices",
    )


class LoggingSection(BaseModel):
    """Logging configuration."""
    level: str = Field("INFO", description="Root log level")
    format: str = Field(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        description="stdlib logging format",
    )
    file: Optional[str] = Field(None, description="Optional log file")


class SystemConfig(BaseModel):
    """Model for system-wide configuration."""
    model_config = ConfigDict(extra="forbid")

    system: SystemSection = Field(default_factory=SystemSection)
    corpus: CorpusSection = Field(default_factory=CorpusSection)
    survey: SurveySection = Field(default_factory=SurveySection)
    render: RenderSection = Field(default_factory=RenderSection)
    logging: LoggingSection = Field(default_factory=LoggingSection)


class ValidityReport(BaseModel):
    """Validator verdicts for one lattice."""
    semimodular: bool = False
    slim: bool = False
    rectangular: bool = False
    corners: Optional[Tuple[int, int]] = None
    diagnosis: Optional[str] = None

    @property
    def valid(self) -> bool:
        return self.semimodular and self.slim and self.rectangular


class PropertyReport(BaseModel):
    """The four congruence-lattice properties evaluated on P."""
    partition: bool
    maximal_cover: bool
    no_child: bool
    four_crown: bool

    def all_hold(self) -> bool:
        return self.partition and self.maximal_cover and self.no_child and self.four_crown


class Counterexample(BaseModel):
    """Edge pairs or configurations where a covering corollary disagrees with P."""
    count: int = Field(..., ge=1, description="Number of disagreeing pairs or configurations")
    samples: List[str] = Field(default_factory=list, description="First few occurrences")


class CheckReport(BaseModel):
    """Per-lattice report written by the ``check`` command."""
    schema_version: int = SCHEMA_VERSION
    recipe: Optional[Recipe] = None
    n: int = Field(..., description="Element count")
    valid: ValidityReport
    p_size: Optional[int] = Field(None, description="Number of join-irreducible congruences")
    properties: Optional[PropertyReport] = None
    witnesses: Dict[str, Any] = Field(default_factory=dict)
    oracle: Optional[bool] = Field(None, description="Swing decision equals the oracle")
    corollaries: Optional[bool] = Field(None, description="Corollary patterns equal the oracle")
    covnew: Optional[bool] = None
    lemmas: Dict[str, bool] = Field(default_factory=dict)
    layout: Optional[bool] = Field(None, description="Coordinates form a C1-diagram")
    failures: List[str] = Field(default_factory=list)
    counterexamples: Dict[str, Counterexample] = Field(
        default_factory=dict,
        description="Covering corollaries contradicted by P, keyed by check name",
    )

    def theorem_failed(self) -> bool:
        return self.properties is not None and not self.properties.all_hold()

    def passed(self) -> bool:
        return not self.failures and not self.theorem_failed()

    def discovered(self) -> bool:
        return bool(self.counterexamples)


class PosetReport(BaseModel):
    """JSON form of P emitted by the ``congruences`` command."""
    schema_version: int = SCHEMA_VERSION
    elements: int
    leq: List[List[int]]
    covers: List[Tuple[int, int]]
    maximal: List[int]
    col: Dict[str, int]


class SurveyRecord(BaseModel):
    """One recipe's outcome in a corpus survey."""
    recipe: Recipe
    n: int
    p_size: Optional[int] = None
    valid: bool
    properties: Optional[PropertyReport] = None
    oracle: Optional[bool] = None
    corollaries: Optional[bool] = None
    covnew: Optional[bool] = None
    lemmas: Dict[str, bool] = Field(default_factory=dict)
    layout: Optional[bool] = None
    witnesses: Optional[Dict[str, Any]] = Field(
        None, description="Property witnesses, kept when a property fails"
    )
    counterexamples: Dict[str, Counterexample] = Field(default_factory=dict)
    error: Optional[str] = None
    elapsed_ms: Optional[float] = None

    def ok(self) -> bool:
        if self.error is not None or not self.valid:
            return False
        flags = [self.oracle, self.corollaries, self.covnew, self.layout]
        flags.extend(self.lemmas.values())
        if self.properties is not None:
            flags.append(self.properties.all_hold())
        return all(flag is not False for flag in flags)

    def theorem_failed(self) -> bool:
        return self.properties is not None and not self.properties.all_hold()

    def discovered(self) -> bool:
        return bool(self.counterexamples)


class SurveySummary(BaseModel):
    """Totals over a survey."""
    recipes: int
    passed: int
    failed: int
    theorem_failures: int
    max_elements: int
    discoveries: int = Field(0, description="Recipes with covering-corollary counterexamples")


class SurveyReport(BaseModel):
    """Model for a full corpus survey."""
    schema_version: int = SCHEMA_VERSION
    bounds: Dict[str, int]
    records: List[SurveyRecord]
    summary: SurveySummary
