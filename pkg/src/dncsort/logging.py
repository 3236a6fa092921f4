from __future__ import annotations

from rich.console import Console
from rich.logging import RichHandler
import logging

_ROOT = "dncsort"

_console = Console()
# Records and diagnostics go to stderr; stdout carries sorted numbers and JSON.
_err_console = Console(stderr=True)

def get_logger(name: str = _ROOT) -> logging.Logger:
    root = logging.getLogger(_ROOT)
    if not root.handlers:
        handler = RichHandler(console=_err_console, show_time=True, show_level=True, show_path=False)
        formatter = logging.Formatter("%(message)s")
        handler.setFormatter(formatter)
        root.addHandler(handler)
        root.setLevel(logging.INFO)
        root.propagate = False
    # Module loggers inherit level and handler from the package logger.
    return logging.getLogger(name)

def set_verbose(verbose: bool) -> None:
    get_logger().setLevel(logging.DEBUG if verbose else logging.INFO)

def console() -> Console:
    return _console

def err_console() -> Console:
    return _err_console
