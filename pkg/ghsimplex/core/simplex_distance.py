"""Gromov-Hausdorff distances from finite metric spaces to simplexes.

All values returned here are doubled distances, 2*d_GH, which is what the
partition formulas and the closed forms produce directly.
"""

import logging
import math
from enum import Enum
from functools import lru_cache
from typing import Any

import networkx as nx
import numpy as np
from networkx.algorithms import isomorphism
from pydantic import BaseModel, ConfigDict, Field

from ..config import get_settings
from .exceptions import (
    BlockCountMismatch,
    DimensionMismatch,
    InvalidSimplex,
    KOutOfRange,
    LambdaTooLarge,
    LambdaTooSmall,
    NotSurjective,
    PartitionMismatch,
    PreconditionFailed,
    TooLarge,
)
from .metric_space import (
    FiniteMetricSpace,
    diameter,
    min_positive_distance,
    simplex_space,
    triangle_tolerance,
)
from .partitions import Partition, min_block_diameter, partition_stats, scored_partitions
from .spanning import mst_cut_partition, mst_spectrum, xst_spectrum

logger = logging.getLogger(__name__)

# enumeration chunk for the correspondence oracle
_CHUNK = 1 << 16


class SimplexSpec(BaseModel):
    """The simplex lam*Delta_m: m points, all nonzero distances equal to lam."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    m: int
    lam: float = Field(alias="lambda")

    def model_post_init(self, __context: Any) -> None:
        if self.m < 1:
            raise InvalidSimplex(f"Simplex needs at least one point, got m={self.m}")
        if not (self.lam > 0 and math.isfinite(self.lam)):
            raise InvalidSimplex(
                f"Simplex edge length must be positive and finite, got {self.lam!r}"
            )

    def space(self) -> FiniteMetricSpace:
        return simplex_space(self.m, self.lam)


class Correspondence(BaseModel):
    """A relation between two index sets, stored as sorted (left, right) pairs."""

    model_config = ConfigDict(frozen=True)

    pairs: tuple[tuple[int, int], ...]

    @classmethod
    def from_pairs(cls, pairs: Any) -> "Correspondence":
        return cls(pairs=tuple(sorted({(int(i), int(x)) for i, x in pairs})))

    @classmethod
    def from_partition(cls, partition: Partition) -> "Correspondence":
        """R_D: simplex vertex i is matched with every point of block X_i."""
        return cls.from_pairs(
            (i, x) for i, block in enumerate(partition.blocks) for x in block
        )

    def to_json_dict(self) -> dict[str, Any]:
        return {"pairs": [list(pair) for pair in self.pairs]}


class DistanceMethod(str, Enum):
    """Which closed form or computation produced a distance."""

    SINGLE_POINT = "single_point"
    LARGER_SIMPLEX = "larger_simplex"
    PARTITION_MINIMUM = "partition_minimum"
    BRUTEFORCE = "bruteforce"
    SAME_SIZE = "same_size"
    MINUS_ONE = "minus_one"
    LARGE_LAMBDA = "large_lambda"
    DOUBLED_DIAMETER = "doubled_diameter"
    SMALL_LAMBDA = "small_lambda"
    DIAM_SATURATED = "diam_saturated"


class DistanceResult(BaseModel):
    """A doubled Gromov-Hausdorff distance with an optional witness."""

    model_config = ConfigDict(frozen=True)

    value: float = Field(ge=0)
    method: DistanceMethod
    witness: Partition | Correspondence | None = None
    branch: str | None = None

    @property
    def dgh(self) -> float:
        return self.value / 2

    def witness_correspondence(self) -> Correspondence | None:
        if isinstance(self.witness, Partition):
            return Correspondence.from_partition(self.witness)
        return self.witness

    def to_json_dict(self, include_dgh: bool = True) -> dict[str, Any]:
        data: dict[str, Any] = {"two_dgh": self.value}
        if include_dgh:
            data["dgh"] = self.dgh
        data["method"] = self.method.value
        if self.branch is not None:
            data["branch"] = self.branch
        data["witness"] = self.witness.to_json_dict() if self.witness else None
        return data


def distortion(
    relation: Correspondence, left: FiniteMetricSpace, right: FiniteMetricSpace
) -> float:
    """dis R = max ||ii'| - |xx'|| over pairs (i, x), (i', x') of R.

    Raises:
        NotSurjective: If some point of either space is unmatched, or a pair
            has an index outside its space
    """
    pairs = np.asarray(relation.pairs, dtype=int).reshape(-1, 2)
    lefts, rights = pairs[:, 0], pairs[:, 1]
    if pairs.size and (
        lefts.min() < 0 or lefts.max() >= left.n or rights.min() < 0 or rights.max() >= right.n
    ):
        raise NotSurjective("Relation has indices outside the spaces")
    for side, indices, size in (("Left", lefts, left.n), ("Right", rights, right.n)):
        missing = sorted(set(range(size)) - set(indices.tolist()))
        if missing:
            raise NotSurjective(f"{side} points {missing} are unmatched")
    gaps = left.matrix[np.ix_(lefts, lefts)] - right.matrix[np.ix_(rights, rights)]
    return float(np.abs(gaps).max())


@lru_cache(maxsize=32)
def _minimal_correspondences(m: int, n: int) -> np.ndarray:
    """Inclusion-minimal bi-surjective relations of an m x n grid.

    Every subset of the grid is enumerated and filtered to the relations
    surjective onto both sides; those with a removable cell are then
    dropped. Distortion never decreases when pairs are added, so the
    minimum over the survivors is the minimum over all correspondences.
    Cell c stands for the pair (c // n, c % n).
    """
    cells = m * n
    shifts = np.arange(cells, dtype=np.uint32)
    kept = []
    total = 0
    for start in range(0, 1 << cells, _CHUNK):
        codes = np.arange(start, min(start + _CHUNK, 1 << cells), dtype=np.uint32)
        grid = ((codes[:, None] >> shifts) & 1).astype(bool).reshape(-1, m, n)
        onto = grid.any(axis=2).all(axis=1) & grid.any(axis=1).all(axis=1)
        grid = grid[onto]
        total += len(grid)
        rows = grid.sum(axis=2)
        cols = grid.sum(axis=1)
        removable = grid & (rows[:, :, None] >= 2) & (cols[:, None, :] >= 2)
        kept.append(grid[~removable.any(axis=(1, 2))].reshape(-1, cells))
    minimal = np.concatenate(kept)
    logger.info(
        f"Enumerated {total} correspondences on a {m}x{n} grid, "
        f"{len(minimal)} inclusion-minimal"
    )
    minimal.flags.writeable = False
    return minimal


def gh_bruteforce(left: FiniteMetricSpace, right: FiniteMetricSpace) -> DistanceResult:
    """Exact 2*d_GH as the least distortion over all correspondences.

    Raises:
        TooLarge: If left.n * right.n exceeds the configured cell limit
    """
    limit = get_settings().bruteforce_cell_limit
    m, n = left.n, right.n
    if m * n > limit:
        raise TooLarge(m * n, limit)
    relations = _minimal_correspondences(m, n)
    rows = np.repeat(np.arange(m), n)
    cols = np.tile(np.arange(n), m)
    # gap[c, c'] = ||i i'| - |x x'|| for cells c = (i, x), c' = (i', x')
    gap = np.abs(
        left.matrix[np.ix_(rows, rows)] - right.matrix[np.ix_(cols, cols)]
    )
    best_value, best_index = np.inf, -1
    for start in range(0, len(relations), 4096):
        chunk = relations[start : start + 4096]
        both = chunk[:, :, None] & chunk[:, None, :]
        values = np.where(both, gap, 0.0).max(axis=(1, 2))
        index = int(values.argmin())
        if values[index] < best_value:
            best_value, best_index = float(values[index]), start + index
    cells = np.flatnonzero(relations[best_index])
    witness = Correspondence.from_pairs((c // n, c % n) for c in cells)
    return DistanceResult(value=best_value, method=DistanceMethod.BRUTEFORCE, witness=witness)


def dis_RD(space: FiniteMetricSpace, simplex: SimplexSpec, partition: Partition) -> float:
    """Distortion of R_D: max{diam D, lam - alpha(D), beta(D) - lam}.

    Raises:
        BlockCountMismatch: If D does not have exactly m >= 2 blocks
        PartitionMismatch: If D is not a partition of the space's points
    """
    if partition.k != simplex.m or simplex.m < 2:
        raise BlockCountMismatch(partition.k, simplex.m)
    if partition.n != space.n:
        raise PartitionMismatch(
            f"Partition covers {partition.n} points but the space has {space.n}"
        )
    stats = partition_stats(space, partition)
    return max(stats.diam, simplex.lam - stats.alpha, stats.beta - simplex.lam)


def _larger_simplex_value(space: FiniteMetricSpace, lam: float) -> float:
    return max(lam, diameter(space) - lam)


def gh_to_simplex(space: FiniteMetricSpace, simplex: SimplexSpec) -> DistanceResult:
    """2*d_GH(lam*Delta_m, X).

    m = 1 gives diam X; m > n gives max{lam, diam X - lam}; otherwise the
    minimum of dis R_D over all partitions D of X into m blocks, with the
    first minimizing partition as witness.
    """
    m, lam = simplex.m, simplex.lam
    if m == 1:
        return DistanceResult(
            value=diameter(space),
            method=DistanceMethod.SINGLE_POINT,
            witness=Correspondence.from_pairs((0, x) for x in range(space.n)),
        )
    if m > space.n:
        return DistanceResult(
            value=_larger_simplex_value(space, lam), method=DistanceMethod.LARGER_SIMPLEX
        )
    best, witness = np.inf, None
    for partition, stats in scored_partitions(space, m):
        value = max(stats.diam, lam - stats.alpha, stats.beta - lam)
        if value < best:
            best, witness = value, partition
    logger.debug(f"Partition minimum for m={m}, lambda={lam!r}: {best!r}")
    return DistanceResult(
        value=float(best), method=DistanceMethod.PARTITION_MINIMUM, witness=witness
    )


def closed_form_same_n(space: FiniteMetricSpace, simplex: SimplexSpec) -> DistanceResult:
    """m = n: max{lam - eps(X), diam X - lam}.

    The branch is "lambda_minus_sigma" when sigma_{n-1} + Sigma_{n-1} <= 2*lam,
    otherwise "Sigma_minus_lambda".
    """
    if simplex.m != space.n or space.n < 2:
        raise DimensionMismatch(f"Needs m = n >= 2, got m={simplex.m}, n={space.n}")
    eps, diam, lam = min_positive_distance(space), diameter(space), simplex.lam
    branch = "lambda_minus_sigma" if eps + diam <= 2 * lam else "Sigma_minus_lambda"
    singletons = Partition.from_blocks([i] for i in range(space.n))
    return DistanceResult(
        value=max(lam - eps, diam - lam),
        method=DistanceMethod.SAME_SIZE,
        witness=singletons,
        branch=branch,
    )


def minus_one_correspondence(space: FiniteMetricSpace) -> Correspondence:
    """One simplex vertex onto a closest pair of X, one-to-one elsewhere."""
    if space.n < 2:
        raise DimensionMismatch("A closest pair needs at least two points")
    matrix = space.matrix
    upper = np.triu_indices(space.n, k=1)
    first = int(np.argmin(matrix[upper]))
    p, q = int(upper[0][first]), int(upper[1][first])
    blocks = [[p, q]] + [[i] for i in range(space.n) if i not in (p, q)]
    return Correspondence.from_partition(Partition.from_blocks(blocks))


def closed_form_minus_one(space: FiniteMetricSpace, simplex: SimplexSpec) -> DistanceResult:
    """m = n - 1: max{sigma_{n-1}, lam - sigma_{n-2}, Sigma_{n-1} - lam}.

    For n = 2 the middle term is absent and the value is sigma_1 = diam X.
    """
    n = space.n
    if n < 2 or simplex.m != n - 1:
        raise DimensionMismatch(f"Needs m = n - 1 >= 1, got m={simplex.m}, n={n}")
    sigma = mst_spectrum(space).values
    top = xst_spectrum(space).values[-1]
    terms = [sigma[-1], top - simplex.lam]
    if n >= 3:
        terms.append(simplex.lam - sigma[-2])
    return DistanceResult(
        value=max(terms),
        method=DistanceMethod.MINUS_ONE,
        witness=minus_one_correspondence(space),
    )


def _check_k(space: FiniteMetricSpace, k: int) -> None:
    if not 1 <= k <= space.n - 1:
        raise KOutOfRange(space.n, k + 1)


def closed_form_large_lambda(space: FiniteMetricSpace, k: int, lam: float) -> DistanceResult:
    """2*d_GH(lam*Delta_{k+1}, X) = lam - sigma_k when lam >= diam X + sigma_k.

    Raises:
        LambdaTooSmall: If lam < diam X + sigma_k
    """
    _check_k(space, k)
    sigma_k = mst_spectrum(space)[k - 1]
    threshold = diameter(space) + sigma_k
    if lam < threshold:
        raise LambdaTooSmall(f"lambda={lam!r} is below diam X + sigma_{k} = {threshold!r}")
    return DistanceResult(
        value=lam - sigma_k,
        method=DistanceMethod.LARGE_LAMBDA,
        witness=mst_cut_partition(space, k),
    )


def closed_form_doubled_diameter(
    space: FiniteMetricSpace, k: int, lam: float
) -> DistanceResult:
    """The lam >= 2*diam X special case of the large-lambda formula."""
    _check_k(space, k)
    if lam < 2 * diameter(space):
        raise LambdaTooSmall(f"lambda={lam!r} is below 2*diam X = {2 * diameter(space)!r}")
    result = closed_form_large_lambda(space, k, lam)
    return result.model_copy(update={"method": DistanceMethod.DOUBLED_DIAMETER})


def closed_form_small_lambda(space: FiniteMetricSpace, m: int, lam: float) -> DistanceResult:
    """max{d_m(X), diam X - lam} for 0 < lam <= diam X / 2 and m <= n.

    Raises:
        LambdaTooLarge: If lam is not in (0, diam X / 2]
    """
    if not 1 <= m <= space.n:
        raise KOutOfRange(space.n, m)
    diam = diameter(space)
    if not 0 < lam <= diam / 2:
        raise LambdaTooLarge(f"lambda={lam!r} is outside (0, diam X / 2 = {diam / 2!r}]")
    d_m, witness = min_block_diameter(space, m, with_witness=True)
    return DistanceResult(
        value=max(d_m, diam - lam), method=DistanceMethod.SMALL_LAMBDA, witness=witness
    )


def closed_form_diam_saturated(space: FiniteMetricSpace, k: int, lam: float) -> DistanceResult:
    """diam X when lam < diam X + sigma_k and d_{k+1}(X) = diam X.

    Raises:
        PreconditionFailed: If either hypothesis fails
    """
    _check_k(space, k)
    diam = diameter(space)
    sigma_k = mst_spectrum(space)[k - 1]
    if not lam < diam + sigma_k:
        raise PreconditionFailed(f"lambda={lam!r} is not below diam X + sigma_{k}")
    d_m = min_block_diameter(space, k + 1)
    if d_m != diam:
        raise PreconditionFailed(f"d_{k + 1}(X)={d_m!r} differs from diam X={diam!r}")
    return DistanceResult(
        value=diam, method=DistanceMethod.DIAM_SATURATED, witness=mst_cut_partition(space, k)
    )


def simplex_regimes(space: FiniteMetricSpace, simplex: SimplexSpec) -> list[DistanceMethod]:
    """Closed forms whose hypotheses hold for this space and simplex.

    An empty list marks a formula-free regime where only the partition
    minimum applies.
    """
    m, lam, n = simplex.m, simplex.lam, space.n
    if m == 1:
        return [DistanceMethod.SINGLE_POINT]
    if m > n:
        return [DistanceMethod.LARGER_SIMPLEX]
    regimes = []
    diam = diameter(space)
    sigma_k = mst_spectrum(space)[m - 2]
    if m == n:
        regimes.append(DistanceMethod.SAME_SIZE)
    if m == n - 1:
        regimes.append(DistanceMethod.MINUS_ONE)
    if lam >= diam + sigma_k:
        regimes.append(DistanceMethod.LARGE_LAMBDA)
    if lam >= 2 * diam:
        regimes.append(DistanceMethod.DOUBLED_DIAMETER)
    if lam <= diam / 2:
        regimes.append(DistanceMethod.SMALL_LAMBDA)
    if lam < diam + sigma_k and min_block_diameter(space, m) == diam:
        regimes.append(DistanceMethod.DIAM_SATURATED)
    return regimes


def closed_form(
    space: FiniteMetricSpace, simplex: SimplexSpec, method: DistanceMethod
) -> DistanceResult:
    """Evaluate one named closed form."""
    m, lam = simplex.m, simplex.lam
    if method is DistanceMethod.SAME_SIZE:
        return closed_form_same_n(space, simplex)
    if method is DistanceMethod.MINUS_ONE:
        return closed_form_minus_one(space, simplex)
    if method is DistanceMethod.LARGE_LAMBDA:
        return closed_form_large_lambda(space, m - 1, lam)
    if method is DistanceMethod.DOUBLED_DIAMETER:
        return closed_form_doubled_diameter(space, m - 1, lam)
    if method is DistanceMethod.SMALL_LAMBDA:
        return closed_form_small_lambda(space, m, lam)
    if method is DistanceMethod.DIAM_SATURATED:
        return closed_form_diam_saturated(space, m - 1, lam)
    # single point and larger simplex are handled by gh_to_simplex itself
    return gh_to_simplex(space, simplex)


def _weighted_complete_graph(space: FiniteMetricSpace) -> nx.Graph:
    graph = nx.complete_graph(space.n)
    matrix = space.matrix
    for i, j in graph.edges:
        graph.edges[i, j]["length"] = float(matrix[i, j])
    return graph


def isometry_check(
    left: FiniteMetricSpace, right: FiniteMetricSpace
) -> tuple[bool, list[int] | None]:
    """Whether some permutation p gives right[p[i]][p[j]] = left[i][j].

    Distances are compared within the validation tolerance. Returns the
    verdict with a witness permutation when one exists.
    """
    if left.n != right.n:
        return False, None
    tau = triangle_tolerance(max(diameter(left), diameter(right)))
    # different distance multisets rule out an isometry before any search
    if np.abs(np.sort(left.matrix.ravel()) - np.sort(right.matrix.ravel())).max() > tau:
        return False, None
    matcher = isomorphism.GraphMatcher(
        _weighted_complete_graph(left),
        _weighted_complete_graph(right),
        edge_match=isomorphism.numerical_edge_match("length", 0.0, rtol=0.0, atol=tau),
    )
    if not matcher.is_isomorphic():
        return False, None
    return True, [matcher.mapping[i] for i in range(left.n)]
