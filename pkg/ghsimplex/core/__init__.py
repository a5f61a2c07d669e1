"""Core modules for ghsimplex.

This package contains the metric-space model, spanning-tree spectra,
partition functionals, distances to simplexes and their profiles.
"""

from .exceptions import (
    GHSimplexError,
    MatrixParseError,
    MetricAxiomError,
    TooLarge,
    VerificationMismatch,
)
from .matrix_io import dumps_csv, dumps_json, load_space, loads_space
from .metric_space import (
    FiniteMetricSpace,
    PointSet,
    build_space,
    diameter,
    dual_space,
    min_positive_distance,
    scale,
    simplex_space,
)
from .partitions import Partition, PartitionStats, enumerate_partitions, partition_stats
from .profile import (
    FourPointSpace,
    PiecewiseLinearFunction,
    non_isometric_pair,
    profile_equal,
    reduce_candidates,
    simplex_profile,
)
from .simplex_distance import (
    Correspondence,
    DistanceMethod,
    DistanceResult,
    SimplexSpec,
    gh_bruteforce,
    gh_to_simplex,
    isometry_check,
)
from .spanning import maximum_spanning_tree, minimum_spanning_tree, mst_spectrum, xst_spectrum

__all__ = [
    "FiniteMetricSpace",
    "PointSet",
    "Partition",
    "PartitionStats",
    "SimplexSpec",
    "Correspondence",
    "DistanceMethod",
    "DistanceResult",
    "PiecewiseLinearFunction",
    "FourPointSpace",
    "GHSimplexError",
    "MatrixParseError",
    "MetricAxiomError",
    "TooLarge",
    "VerificationMismatch",
    "build_space",
    "simplex_space",
    "diameter",
    "min_positive_distance",
    "scale",
    "dual_space",
    "load_space",
    "loads_space",
    "dumps_csv",
    "dumps_json",
    "minimum_spanning_tree",
    "maximum_spanning_tree",
    "mst_spectrum",
    "xst_spectrum",
    "enumerate_partitions",
    "partition_stats",
    "gh_to_simplex",
    "gh_bruteforce",
    "isometry_check",
    "simplex_profile",
    "reduce_candidates",
    "non_isometric_pair",
    "profile_equal",
]
