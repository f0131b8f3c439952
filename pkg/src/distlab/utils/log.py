"""Logging setup for the command line."""

import logging

from rich.console import Console
from rich.logging import RichHandler


def setup_logging(level: str, console: Console) -> None:
    """Route distlab loggers through a rich handler on the given console."""
    handler = RichHandler(console=console, show_path=False, markup=False)
    logger = logging.getLogger("distlab")
    logger.handlers = [handler]
    logger.setLevel(level.upper())
    logger.propagate = False
