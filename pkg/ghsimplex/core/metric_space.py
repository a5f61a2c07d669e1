"""Validated finite metric spaces and the scalar quantities derived from them."""

import logging
from collections.abc import Iterable, Sequence
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from ..config import get_settings
from .exceptions import (
    AsymmetricMatrix,
    CoincidentPoints,
    DTooSmall,
    EmptySet,
    InvalidSimplex,
    NegativeDistance,
    NonFiniteDistance,
    NonpositiveScale,
    NonSquareMatrix,
    NonzeroDiagonal,
    SinglePointSpace,
    TriangleViolation,
)

logger = logging.getLogger(__name__)


def triangle_tolerance(diameter: float, rtol: float | None = None) -> float:
    """Tolerance used by triangle-inequality checks: rtol * (1 + diam X)."""
    if rtol is None:
        rtol = get_settings().validation_rtol
    return rtol * (1.0 + diameter)


def check_metric_axioms(matrix: np.ndarray) -> None:
    """Check the metric axioms on a square matrix.

    Violations are reported for the first offending entry in row-major order.
    The triangle inequality is checked within ``triangle_tolerance``; all
    other axioms are checked exactly.

    Raises:
        NonSquareMatrix: If the matrix is empty or not square
        NonFiniteDistance: If an entry is NaN or infinite
        NonzeroDiagonal: If a diagonal entry is not zero
        NegativeDistance: If an entry is negative
        AsymmetricMatrix: If dist[i][j] != dist[j][i]
        CoincidentPoints: If two distinct points are at distance zero
        TriangleViolation: If dist[i][k] > dist[i][j] + dist[j][k] + tau
    """
    if matrix.ndim != 2 or matrix.shape[0] == 0 or matrix.shape[0] != matrix.shape[1]:
        rows = matrix.shape[0] if matrix.ndim >= 1 else 0
        raise NonSquareMatrix(rows, [matrix.shape[1]] * rows if matrix.ndim == 2 else [])

    bad = np.argwhere(~np.isfinite(matrix))
    if bad.size:
        i, j = (int(v) for v in bad[0])
        raise NonFiniteDistance(i, j, float(matrix[i, j]))

    diagonal = np.flatnonzero(np.diagonal(matrix) != 0.0)
    if diagonal.size:
        i = int(diagonal[0])
        raise NonzeroDiagonal(i, float(matrix[i, i]))

    bad = np.argwhere(matrix < 0.0)
    if bad.size:
        i, j = (int(v) for v in bad[0])
        raise NegativeDistance(i, j, float(matrix[i, j]))

    bad = np.argwhere(matrix != matrix.T)
    if bad.size:
        i, j = (int(v) for v in bad[0])
        raise AsymmetricMatrix(i, j, float(matrix[i, j]), float(matrix[j, i]))

    n = matrix.shape[0]
    bad = np.argwhere((matrix == 0.0) & ~np.eye(n, dtype=bool))
    if bad.size:
        i, j = (int(v) for v in bad[0])
        raise CoincidentPoints(i, j)

    tau = triangle_tolerance(float(matrix.max()))
    # excess[i, j, k] = |ik| - (|ij| + |jk|)
    excess = matrix[:, None, :] - (matrix[:, :, None] + matrix[None, :, :])
    bad = np.argwhere(excess > tau)
    if bad.size:
        i, j, k = (int(v) for v in bad[0])
        raise TriangleViolation(i, j, k, float(excess[i, j, k]))


class FiniteMetricSpace(BaseModel):
    """A finite metric space given by its validated distance matrix.

    Instances are immutable and always satisfy the metric axioms: the matrix
    is checked on construction and stored verbatim (never clamped).
    """

    model_config = ConfigDict(frozen=True)

    dist: tuple[tuple[float, ...], ...]
    label: str | None = None

    def model_post_init(self, __context: Any) -> None:
        lengths = [len(row) for row in self.dist]
        if not self.dist or any(length != len(self.dist) for length in lengths):
            raise NonSquareMatrix(len(self.dist), lengths)
        check_metric_axioms(np.array(self.dist, dtype=float))

    @property
    def n(self) -> int:
        """Number of points."""
        return len(self.dist)

    @property
    def matrix(self) -> np.ndarray:
        """A fresh float array copy of the distance matrix."""
        return np.array(self.dist, dtype=float)

    def to_json_dict(self) -> dict[str, Any]:
        """Serialize as ``{"n": int, "dist": [[...]], "label": str}``."""
        data: dict[str, Any] = {"n": self.n, "dist": [list(row) for row in self.dist]}
        if self.label is not None:
            data["label"] = self.label
        return data


class PointSet(BaseModel):
    """A nonempty set of point indices of some space."""

    model_config = ConfigDict(frozen=True)

    members: frozenset[int]

    @field_validator("members")
    @classmethod
    def validate_members(cls, v: frozenset[int]) -> frozenset[int]:
        if not v:
            raise EmptySet("Point set must be nonempty")
        return v

    def sorted(self) -> list[int]:
        return sorted(self.members)


def build_space(
    matrix: Sequence[Sequence[float]] | np.ndarray, label: str | None = None
) -> FiniteMetricSpace:
    """Build a validated finite metric space from an n x n grid.

    Args:
        matrix: Square grid of distances
        label: Optional text tag

    Returns:
        The validated space

    Raises:
        MetricAxiomError: If any metric axiom fails (names the indices)
        NonSquareMatrix: If the grid is empty or ragged
    """
    if isinstance(matrix, np.ndarray):
        rows = matrix.tolist()
    else:
        rows = [list(row) for row in matrix]
    lengths = [len(row) for row in rows]
    if not rows or any(length != len(rows) for length in lengths):
        raise NonSquareMatrix(len(rows), lengths)
    return FiniteMetricSpace(
        dist=tuple(tuple(float(v) for v in row) for row in rows), label=label
    )


def simplex_space(m: int, lam: float) -> FiniteMetricSpace:
    """Build the simplex lam*Delta_m: m points, all nonzero distances lam."""
    if m < 1:
        raise InvalidSimplex(f"Simplex needs at least one point, got m={m}")
    if not lam > 0:
        raise InvalidSimplex(f"Simplex edge length must be positive, got {lam!r}")
    matrix = np.full((m, m), float(lam))
    np.fill_diagonal(matrix, 0.0)
    return build_space(matrix, label=f"{lam!r}*Delta_{m}")


def diameter(space: FiniteMetricSpace) -> float:
    """Largest distance in the space; 0 for a single point."""
    return float(space.matrix.max())


def _off_diagonal(space: FiniteMetricSpace) -> np.ndarray:
    matrix = space.matrix
    return matrix[~np.eye(space.n, dtype=bool)]


def min_positive_distance(space: FiniteMetricSpace) -> float:
    """Smallest distance between distinct points, epsilon(X).

    Raises:
        SinglePointSpace: If the space has one point
    """
    if space.n < 2:
        raise SinglePointSpace("min_positive_distance")
    return float(_off_diagonal(space).min())


def distance_vector(space: FiniteMetricSpace) -> list[float]:
    """All n(n-1)/2 nonzero distances ordered descending."""
    upper = space.matrix[np.triu_indices(space.n, k=1)]
    return sorted((float(v) for v in upper), reverse=True)


def scale(space: FiniteMetricSpace, factor: float) -> FiniteMetricSpace:
    """Multiply every distance by a positive factor.

    Raises:
        NonpositiveScale: If factor <= 0
    """
    if not factor > 0:
        raise NonpositiveScale(factor)
    return build_space(space.matrix * factor, label=space.label)


def dual_threshold(space: FiniteMetricSpace) -> float:
    """Largest |ij| + |jk| - |ik| over i != k.

    d - X satisfies the triangle inequality exactly when d is at least this
    value. It never exceeds 2 * diam X, and for an admissible d the threshold
    of d - X is at most d, so dualizing twice with the same d always succeeds.
    """
    matrix = space.matrix
    excess = matrix[:, :, None] + matrix[None, :, :] - matrix[:, None, :]
    excess[np.arange(space.n), :, np.arange(space.n)] = -np.inf
    return float(excess.max())


def dual_space(space: FiniteMetricSpace, d: float | None = None) -> FiniteMetricSpace:
    """The space d - X: same points, distances d - |xy| for x != y.

    Args:
        space: Source space with at least two points
        d: Dual constant; defaults to 2 * diam X

    Raises:
        SinglePointSpace: If the space has one point
        DTooSmall: If d <= diam X or d - X breaks the triangle inequality
    """
    if space.n < 2:
        raise SinglePointSpace("dual_space")
    diam = diameter(space)
    if d is None:
        d = 2.0 * diam
    required = dual_threshold(space)
    if d <= diam or d < required:
        raise DTooSmall(d, max(required, diam))
    matrix = d - space.matrix
    np.fill_diagonal(matrix, 0.0)
    return build_space(matrix, label=space.label)


def relabel(space: FiniteMetricSpace, permutation: Sequence[int]) -> FiniteMetricSpace:
    """Pull the space back along a permutation: new[i][j] = old[p[i]][p[j]]."""
    order = np.asarray(permutation, dtype=int)
    if sorted(order.tolist()) != list(range(space.n)):
        raise ValueError(f"Not a permutation of range({space.n}): {list(permutation)}")
    return build_space(space.matrix[np.ix_(order, order)], label=space.label)


def random_metric_space(
    n: int,
    rng: np.random.Generator,
    low: float = 1.0,
    high: float = 2.0,
    resolution: int = 64,
) -> FiniteMetricSpace:
    """Draw a random n-point metric space.

    Off-diagonal distances are uniform on the grid ``{low, low + 1/resolution,
    ..., high}``. Any such matrix is a metric when ``high <= 2 * low``. With a
    power-of-two resolution, sums, differences and halves of distances are
    exact floats.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 < low <= high <= 2 * low:
        raise ValueError("Need 0 < low <= high <= 2*low")
    ticks = rng.integers(
        round(low * resolution), round(high * resolution), size=(n, n), endpoint=True
    )
    upper = np.triu(ticks / resolution, k=1)
    return build_space(upper + upper.T, label=f"random-{n}")


def _as_indices(space: FiniteMetricSpace, points: PointSet | Iterable[int]) -> list[int]:
    members = points.sorted() if isinstance(points, PointSet) else sorted(set(points))
    if not members:
        raise EmptySet("Point set must be nonempty")
    bad = [i for i in members if not 0 <= i < space.n]
    if bad:
        raise EmptySet(f"Point indices {bad} are outside [0, {space.n})")
    return members


def _cross_block(
    space: FiniteMetricSpace, a: PointSet | Iterable[int], b: PointSet | Iterable[int]
) -> np.ndarray:
    rows = _as_indices(space, a)
    cols = _as_indices(space, b)
    return space.matrix[np.ix_(rows, cols)]


def set_distance_inf(
    space: FiniteMetricSpace, a: PointSet | Iterable[int], b: PointSet | Iterable[int]
) -> float:
    """|AB| = min{|ab| : a in A, b in B}; 0 when the sets meet."""
    return float(_cross_block(space, a, b).min())


def set_distance_sup(
    space: FiniteMetricSpace, a: PointSet | Iterable[int], b: PointSet | Iterable[int]
) -> float:
    """|AB|' = max{|ab| : a in A, b in B}."""
    return float(_cross_block(space, a, b).max())


def hausdorff_distance(
    space: FiniteMetricSpace, a: PointSet | Iterable[int], b: PointSet | Iterable[int]
) -> float:
    """Hausdorff distance max{max_a |aB|, max_b |Ab|} between two point sets."""
    block = _cross_block(space, a, b)
    return float(max(block.min(axis=1).max(), block.min(axis=0).max()))
