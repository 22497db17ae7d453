"""
Loguru sink configuration for the CLI and the suite workers.
"""

from __future__ import annotations

import sys
from typing import TYPE_CHECKING

from loguru import logger

if TYPE_CHECKING:
    from config import LabConfig


def configure_logging(config: "LabConfig") -> None:
    """Replace the default sink with stderr at the configured level plus a rotating file."""
    logger.remove()
    logger.add(sys.stderr, level=config.log_level.upper())
    if config.log_file:
        logger.add(
            config.log_file,
            rotation="1 day",
            retention="30 days",
            level="INFO",
        )
