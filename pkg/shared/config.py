"""
Configuration loading for the slim lattice toolkit.
"""
import logging
import os
from pathlib import Path
from typing import Optional, Union

import yaml
from pydantic import ValidationError

from shared.errors import ConfigError
from shared.models import SystemConfig

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = "config.yaml"


def load_config(config_path: Optional[Union[str, Path]] = None) -> SystemConfig:
    """Load system configuration from a YAML file.

    The path defaults to ``$SLATT_CONFIG`` or ``config.yaml``. A missing file
    yields the built-in defaults. ``$SLATT_JOBS`` overrides ``survey.jobs``.

    Args:
        config_path: Path to configuration file

    Returns:
        Validated configuration

    Raises:
        ConfigError: If the file is not valid YAML or violates the schema
    """
    path = Path(config_path or os.getenv("SLATT_CONFIG", DEFAULT_CONFIG_PATH))

    if path.exists():
        try:
            with open(path, "r", encoding="utf-8") as file:
                config_data = yaml.safe_load(file) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"cannot parse {path}: {e}") from e
    else:
        logger.warning(f"Configuration file {path} not found, using defaults")
        config_data = {}

    try:
        config = SystemConfig(**config_data)
    except (ValidationError, TypeError) as e:
        raise ConfigError(f"invalid configuration in {path}: {e}") from e

    jobs = os.getenv("SLATT_JOBS")
    if jobs:
        try:
            config.survey.jobs = max(1, int(jobs))
        except ValueError as e:
            raise ConfigError(f"SLATT_JOBS must be an integer, got {jobs!r}") from e

    logger.debug(f"Configuration loaded: {config.system.name} v{config.system.version}")
    return config
