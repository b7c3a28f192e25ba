"""
Logging Setup
Installs a single stderr handler; stdout carries command results only
"""

import logging
import sys
from typing import Optional, TextIO

from pythonjsonlogger import jsonlogger

TEXT_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
JSON_FORMAT = '%(asctime)s %(name)s %(levelname)s %(message)s'

_installed: Optional[logging.Handler] = None


def setup_logging(level: str = 'info', fmt: str = 'text', stream: Optional[TextIO] = None) -> logging.Handler:
    """
    Configure the root logger

    Calling it again replaces the previously installed handler, so the CLI
    can reconfigure once settings are loaded.

    Args:
        level: Level name (debug, info, warning, error, critical)
        fmt: 'text' or 'json'
        stream: Output stream; defaults to stderr

    Returns:
        The installed handler

    Raises:
        ValueError: If the level or format is unknown
    """
    numeric = logging.getLevelName(str(level).upper())
    if not isinstance(numeric, int):
        raise ValueError(f"Unknown log level '{level}'")

    handler = logging.StreamHandler(stream or sys.stderr)
    if fmt == 'json':
        handler.setFormatter(jsonlogger.JsonFormatter(JSON_FORMAT))
    elif fmt == 'text':
        handler.setFormatter(logging.Formatter(TEXT_FORMAT))
    else:
        raise ValueError(f"Unknown log format '{fmt}'; expected text or json")

    global _installed
    root = logging.getLogger()
    if _installed is not None:
        root.removeHandler(_installed)
    root.addHandler(handler)
    _installed = handler
    root.setLevel(numeric)
    return handler
