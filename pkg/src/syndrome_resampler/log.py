"""Logging setup shared by the CLI."""

import logging

from rich.console import Console
from rich.logging import RichHandler

_CONFIGURED = False


def configure_logging(level: str | int = "WARNING", console: Console | None = None) -> None:
    """Route package loggers through a single rich handler.

    Safe to call more than once; later calls only change the level.
    """
    global _CONFIGURED
    root = logging.getLogger("syndrome_resampler")
    root.setLevel(level if isinstance(level, int) else level.upper())
    if _CONFIGURED:
        return
    handler = RichHandler(
        console=console or Console(stderr=True),
        show_path=False,
        rich_tracebacks=True,
        markup=False,
    )
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    root.addHandler(handler)
    root.propagate = False
    _CONFIGURED = True
