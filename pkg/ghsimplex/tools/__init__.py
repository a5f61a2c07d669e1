"""Report builders behind the ghsimplex commands.

Each function takes validated inputs and returns a JSON-ready dict or a
rendered string; the command line only parses options and prints.
"""

from .distance_report import distance_report, verify_space
from .profile_report import family_report, render_profile
from .space_report import format_validation, spectrum_report, validation_report

__all__ = [
    "validation_report",
    "format_validation",
    "spectrum_report",
    "distance_report",
    "verify_space",
    "render_profile",
    "family_report",
]
