"""
Reading recipe and lattice JSON files.
"""
import json
import logging
from pathlib import Path
from typing import Optional, Tuple, Union

from pydantic import ValidationError

from lattices.construct import apply_recipe
from lattices.core import Lattice, lattice_from_spec
from shared.errors import InputFormatError
from shared.models import LatticeSpec, Recipe

logger = logging.getLogger(__name__)


def parse_input(data: object) -> Tuple[Lattice, Optional[Recipe]]:
    """Build a lattice from decoded recipe or lattice JSON."""
    if not isinstance(data, dict):
        raise InputFormatError("expected a JSON object")
    try:
        if "grid" in data:
            recipe = Recipe.model_validate(data)
            return apply_recipe(recipe), recipe
        if "upper_covers" in data:
            return lattice_from_spec(LatticeSpec.model_validate(data)), None
    except ValidationError as e:
        raise InputFormatError(f"schema violation: {e}") from e
    raise InputFormatError("expected a recipe ('grid') or a lattice ('upper_covers')")


def load_input(path: Union[str, Path]) -> Tuple[Lattice, Optional[Recipe]]:
    """Load a recipe or an explicit lattice from a JSON file.

    Args:
        path: File to read

    Returns:
        (lattice, recipe) where recipe is None for explicit lattices

    Raises:
        InputFormatError: On unreadable files, malformed JSON or schema violations
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputFormatError(f"cannot read {path}: {e}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFormatError(f"{path} is not valid JSON: {e}") from e
    lattice, recipe = parse_input(data)
    logger.info(f"Loaded {lattice!r} from {path}")
    return lattice, recipe
