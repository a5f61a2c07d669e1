"""Exact profiles t -> 2*d_GH(t*Delta_m, X) and the four-point equal-profile family.

Every partition D into m blocks contributes the convex function
h_D(t) = max{diam D, t - alpha(D), beta(D) - t}; the profile is their lower
envelope, built here as a list of affine pieces with slopes -1, 0 or +1.
"""

import bisect
import csv
import io
import logging
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..config import get_settings
from .exceptions import GHSimplexError, MOutOfRange, OrderingViolated
from .metric_space import FiniteMetricSpace, build_space, diameter
from .partitions import PartitionStats, ScoredPartition, scored_partitions
from .simplex_distance import SimplexSpec, gh_to_simplex
from .spanning import mst_spectrum

logger = logging.getLogger(__name__)


class Piece(BaseModel):
    """slope * t + intercept on [start, end]."""

    model_config = ConfigDict(frozen=True)

    start: float
    end: float
    slope: int
    intercept: float

    def at(self, t: float) -> float:
        return self.slope * t + self.intercept

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "from": self.start,
            "to": self.end,
            "slope": self.slope,
            "intercept": self.intercept,
        }


class PiecewiseLinearFunction(BaseModel):
    """A continuous piecewise-linear function on (0, T]."""

    model_config = ConfigDict(frozen=True)

    m: int | None = None
    T: float = Field(gt=0)
    pieces: tuple[Piece, ...]

    @property
    def breakpoints(self) -> list[float]:
        """t_0 = 0 < t_1 < ... < t_r = T."""
        return [self.pieces[0].start] + [piece.end for piece in self.pieces]

    def evaluate(self, t: float) -> float:
        ends = [piece.end for piece in self.pieces]
        index = min(bisect.bisect_left(ends, t), len(self.pieces) - 1)
        return self.pieces[index].at(t)

    def samples(self, count: int | None = None) -> list[tuple[float, float]]:
        """``count`` uniformly spaced (t, value) pairs ending at T."""
        if count is None:
            count = get_settings().profile_samples
        grid = np.linspace(0.0, self.T, count + 1)[1:]
        return [(float(t), self.evaluate(float(t))) for t in grid]

    def to_json_dict(self, samples: int | None = None) -> dict[str, Any]:
        return {
            "m": self.m,
            "T": self.T,
            "pieces": [piece.to_json_dict() for piece in self.pieces],
            "samples": [list(pair) for pair in self.samples(samples)],
        }

    def to_csv(self, samples: int | None = None) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["t", "two_dgh"])
        for t, value in self.samples(samples):
            writer.writerow([repr(t), repr(value)])
        return buffer.getvalue()


def default_horizon(space: FiniteMetricSpace) -> float:
    """T = 2 * (diam X + sigma_1), wide enough to show every regime."""
    if space.n < 2:
        return 1.0
    return 2.0 * (diameter(space) + mst_spectrum(space)[0])


def _stat_arrays(stats: list[PartitionStats]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    diam = np.array([s.diam for s in stats])
    alpha = np.array([s.alpha for s in stats])
    beta = np.array([s.beta for s in stats])
    return diam, alpha, beta


def _kinks(diam: np.ndarray, alpha: np.ndarray, beta: np.ndarray) -> np.ndarray:
    points = np.concatenate([[0.0], diam + alpha, beta - diam, (alpha + beta) / 2])
    return np.unique(points[points >= 0])


def _envelope_values(
    diam: np.ndarray, alpha: np.ndarray, beta: np.ndarray, t: np.ndarray
) -> np.ndarray:
    """values[i, g] = h_i(t_g)."""
    return np.maximum(
        diam[:, None], np.maximum(t[None, :] - alpha[:, None], beta[:, None] - t[None, :])
    )


def _undominated(dominates: np.ndarray, strict: np.ndarray) -> np.ndarray:
    """Keep i unless some j dominates it strictly, or equivalently and earlier."""
    count = len(dominates)
    earlier = np.tril(np.ones((count, count), dtype=bool), k=-1).T
    np.fill_diagonal(dominates, False)
    dropped = (dominates & (strict | earlier)).any(axis=0)
    return ~dropped


def reduce_scored(space: FiniteMetricSpace, m: int) -> list[ScoredPartition]:
    """Partitions whose h_D is not pointwise dominated by another candidate.

    Among candidates with identical h_D the first in enumeration order stays.
    """
    if not 2 <= m <= space.n:
        raise MOutOfRange(m, space.n)
    scored = scored_partitions(space, m)
    diam, alpha, beta = _stat_arrays([stats for _, stats in scored])

    # componentwise domination implies pointwise domination
    component = (
        (diam[:, None] <= diam[None, :])
        & (alpha[:, None] >= alpha[None, :])
        & (beta[:, None] <= beta[None, :])
    )
    start = np.maximum(diam, beta)
    strict = (alpha[:, None] > alpha[None, :]) | (start[:, None] < start[None, :])
    keep = np.flatnonzero(_undominated(component, strict))
    diam, alpha, beta = diam[keep], alpha[keep], beta[keep]

    # h_D - h_D' is linear between kinks of either, and alpha fixes the tail
    values = _envelope_values(diam, alpha, beta, _kinks(diam, alpha, beta))
    pointwise = (values[:, None, :] <= values[None, :, :]).all(axis=2) & (
        alpha[:, None] >= alpha[None, :]
    )
    survivors = keep[_undominated(pointwise, ~pointwise.T)]
    logger.debug(
        f"Reduced {len(scored)} partitions into {m} blocks to {len(survivors)} candidates"
    )
    return [scored[i] for i in survivors]


def reduce_candidates(space: FiniteMetricSpace, m: int) -> list[PartitionStats]:
    """Minimal dominating subset of the partition candidates for m blocks."""
    return [stats for _, stats in reduce_scored(space, m)]


def simplex_profile(
    space: FiniteMetricSpace, m: int, T: float | None = None
) -> PiecewiseLinearFunction:
    """Exact lower envelope of h_D over all partitions D into m blocks on (0, T].

    Args:
        space: Source space
        m: Simplex size, 2 <= m <= n
        T: Right end of the domain; defaults to ``default_horizon``

    Raises:
        MOutOfRange: If m is outside [2, n]
    """
    if not 2 <= m <= space.n:
        raise MOutOfRange(m, space.n)
    if T is None:
        T = default_horizon(space)
    if not T > 0:
        raise GHSimplexError(f"Profile horizon must be positive, got {T!r}")

    diam, alpha, beta = _stat_arrays(reduce_candidates(space, m))
    slopes = np.tile(np.array([0, 1, -1]), len(diam))
    intercepts = np.column_stack([diam, -alpha, beta]).ravel()

    # pairwise intersections of all affine pieces inside (0, T)
    ds = slopes[:, None] - slopes[None, :]
    db = intercepts[None, :] - intercepts[:, None]
    with np.errstate(divide="ignore", invalid="ignore"):
        crossings = np.where(ds != 0, db / ds, np.nan)
    inner = crossings[np.isfinite(crossings) & (crossings > 0) & (crossings < T)]
    grid = np.unique(np.concatenate([[0.0, T], inner]))

    pieces: list[Piece] = []
    midpoints = (grid[:-1] + grid[1:]) / 2
    for start, end, middle in zip(grid[:-1], grid[1:], midpoints, strict=True):
        heights = np.maximum(diam, np.maximum(middle - alpha, beta - middle))
        best = int(np.argmin(heights))
        local = np.array([diam[best], middle - alpha[best], beta[best] - middle])
        active = int(np.argmax(local))
        slope = int(slopes[3 * best + active])
        intercept = float(intercepts[3 * best + active])
        if pieces and pieces[-1].slope == slope and pieces[-1].intercept == intercept:
            pieces[-1] = pieces[-1].model_copy(update={"end": float(end)})
        else:
            pieces.append(
                Piece(start=float(start), end=float(end), slope=slope, intercept=intercept)
            )
    logger.info(f"Profile for m={m} on (0, {T!r}] has {len(pieces)} pieces")
    return PiecewiseLinearFunction(m=m, T=float(T), pieces=tuple(pieces))


class FourPointSpace(BaseModel):
    """Four points with |x1x2|=a, |x1x3|=b, |x2x3|=c, |x1x4|=d, |x2x4|=e, |x3x4|=f."""

    model_config = ConfigDict(frozen=True)

    a: float = Field(gt=0)
    b: float = Field(gt=0)
    c: float = Field(gt=0)
    d: float = Field(gt=0)
    e: float = Field(gt=0)
    f: float = Field(gt=0)

    def model_post_init(self, __context: Any) -> None:
        self.space()

    def matrix(self) -> list[list[float]]:
        a, b, c, d, e, f = self.a, self.b, self.c, self.d, self.e, self.f
        return [
            [0.0, a, b, d],
            [a, 0.0, c, e],
            [b, c, 0.0, f],
            [d, e, f, 0.0],
        ]

    def space(self, label: str | None = None) -> FiniteMetricSpace:
        return build_space(self.matrix(), label=label)


class FamilyParameters(BaseModel):
    """a < b < c < d < f < e for every f in ``fs``."""

    model_config = ConfigDict(frozen=True)

    a: float
    b: float
    c: float
    d: float
    e: float
    fs: tuple[float, ...]


def non_isometric_pair(
    a: float, b: float, c: float, d: float, e: float, f: float
) -> tuple[FourPointSpace, FourPointSpace]:
    """Two four-point spaces differing by swapping |x1x4| and |x3x4|.

    S1 has d at x1x4 and f at x3x4; S2 has them the other way round. Both
    have the same distance to every simplex but are not isometric.

    Raises:
        OrderingViolated: Unless a < b < c < d < f < e
        TriangleViolation: If either matrix is not a metric
    """
    if not a < b < c < d < f < e:
        raise OrderingViolated(
            f"Need a < b < c < d < f < e, got {a!r}, {b!r}, {c!r}, {d!r}, {f!r}, {e!r}"
        )
    first = FourPointSpace(a=a, b=b, c=c, d=d, e=e, f=f)
    second = FourPointSpace(a=a, b=b, c=c, d=f, e=e, f=d)
    return first, second


def random_family_parameters(
    rng: np.random.Generator, f_count: int = 5, resolution: int = 64
) -> FamilyParameters:
    """Draw admissible a < b < c < d < f < e on a dyadic grid in [1, 2].

    All values lie in [1, 2], so every triangle inequality holds.
    """
    top = 2 * resolution
    first = np.sort(rng.choice(np.arange(resolution, top - f_count), size=4, replace=False))
    d_tick = int(first[-1])
    e_tick = int(rng.integers(d_tick + f_count + 1, top, endpoint=True))
    f_ticks = np.sort(rng.choice(np.arange(d_tick + 1, e_tick), size=f_count, replace=False))
    a, b, c, d = (float(v) / resolution for v in first)
    return FamilyParameters(
        a=a,
        b=b,
        c=c,
        d=d,
        e=e_tick / resolution,
        fs=tuple(float(v) / resolution for v in f_ticks),
    )


def _profile_grid(space: FiniteMetricSpace, m: int, T: float) -> list[float]:
    points = [T, diameter(space) / 2]
    if 2 <= m <= space.n:
        points.extend(simplex_profile(space, m, T).breakpoints)
    return points


def profile_equal(
    first: FiniteMetricSpace, second: FiniteMetricSpace, T: float | None = None
) -> bool:
    """Whether 2*d_GH(t*Delta_m, .) agrees for both spaces, every m and t in (0, T].

    Both profiles are linear between the breakpoints of either, so agreement
    on the merged breakpoints and the midpoints between them certifies
    agreement on the whole domain.
    """
    if T is None:
        T = max(default_horizon(first), default_horizon(second))
    tolerance = get_settings().profile_tolerance
    for m in range(1, max(first.n, second.n) + 2):
        grid = sorted(
            {t for t in _profile_grid(first, m, T) + _profile_grid(second, m, T) if 0 < t <= T}
        )
        grid = sorted(set(grid) | {(x + y) / 2 for x, y in zip(grid, grid[1:])})
        for t in grid:
            simplex = SimplexSpec(m=m, lam=t)
            left = gh_to_simplex(first, simplex).value
            right = gh_to_simplex(second, simplex).value
            if abs(left - right) > tolerance:
                logger.debug(f"Profiles differ at m={m}, t={t!r}: {left!r} vs {right!r}")
                return False
    return True
