"""ghsimplex.

Gromov-Hausdorff distances from finite metric spaces to simplexes, their
spanning-tree spectra and exact distance profiles.
"""

__version__ = "0.1.0"
__author__ = "Hal"
__email__ = "hal.long@outlook.com"

from ghsimplex.cli import main

__all__ = ["main", "__version__"]
