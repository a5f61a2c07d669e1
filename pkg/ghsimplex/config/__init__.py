"""Configuration management for ghsimplex.

This package handles loading and validating settings from the environment
(``GHSIMPLEX_*`` variables) and an optional ``.env`` file.
"""

from .settings import (
    GHSimplexSettings,
    get_settings,
    reload_settings,
    update_settings,
)

__all__ = [
    "GHSimplexSettings",
    "get_settings",
    "reload_settings",
    "update_settings",
]
