"""
Logging initialization helper
"""
import logging
from typing import Optional

from ..config.settings import settings

_configured = False


def configure_logging(level: Optional[str] = None) -> None:
    """
    Configure the root logger once from settings

    Args:
        level: Optional level name overriding settings.logging.level
    """
    global _configured
    level_name = (level or settings.logging.level).upper()
    root = logging.getLogger()
    if not _configured:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(settings.logging.format))
        root.addHandler(handler)
        _configured = True
    root.setLevel(getattr(logging, level_name, logging.WARNING))
