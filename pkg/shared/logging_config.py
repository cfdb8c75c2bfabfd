"""
Logging setup shared by the command-line tools.
"""
import logging
from typing import List

import structlog

from shared.models import LoggingSection


def configure_logging(settings: LoggingSection) -> None:
    """Configure stdlib logging and route structlog events through it.

    Args:
        settings: Logging section of the system configuration
    """
    handlers: List[logging.Handler] = [logging.StreamHandler()]
    if settings.file:
        handlers.append(logging.FileHandler(settings.file, encoding="utf-8"))

    logging.basicConfig(
        level=getattr(logging, settings.level.upper(), logging.INFO),
        format=settings.format,
        handlers=handlers,
        force=True,
    )

    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_log_level,
            structlog.processors.KeyValueRenderer(sort_keys=True),
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )
