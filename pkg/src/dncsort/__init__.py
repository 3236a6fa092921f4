from __future__ import annotations

__all__ = [
    "algorithms",
    "config",
    "contracts",
    "core",
    "schema",
    "trace",
    "verify",
]

__version__ = "0.1.0"
