"""Set partitions of a finite space and the functionals alpha, beta and diam.

Partitions are enumerated as restricted-growth strings in lexicographic
order, so every minimizer or maximizer reported here is the first one in
that order.
"""

import logging
import math
from collections.abc import Iterable, Iterator
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict

from .exceptions import KOutOfRange, PartitionMismatch
from .metric_space import FiniteMetricSpace

logger = logging.getLogger(__name__)


class Partition(BaseModel):
    """A division of the indices 0..n-1 into k nonempty blocks.

    Blocks are stored sorted, and ordered by their smallest member.
    """

    model_config = ConfigDict(frozen=True)

    blocks: tuple[tuple[int, ...], ...]

    def model_post_init(self, __context: Any) -> None:
        members = [i for block in self.blocks for i in block]
        if any(not block for block in self.blocks):
            raise PartitionMismatch("Partition blocks must be nonempty")
        if sorted(members) != list(range(len(members))):
            raise PartitionMismatch(
                f"Blocks {self.as_lists()} do not partition 0..{len(members) - 1}"
            )
        canonical = tuple(sorted(tuple(sorted(block)) for block in self.blocks))
        if canonical != self.blocks:
            raise PartitionMismatch(f"Blocks {self.as_lists()} are not in canonical order")

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> "Partition":
        """Build a partition from blocks in any order."""
        canonical = sorted(tuple(sorted(block)) for block in blocks)
        return cls(blocks=tuple(canonical))

    @classmethod
    def from_labels(cls, labels: Iterable[int]) -> "Partition":
        """Build a partition from a block label per point."""
        groups: dict[int, list[int]] = {}
        for point, label in enumerate(labels):
            groups.setdefault(label, []).append(point)
        return cls.from_blocks(groups.values())

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def n(self) -> int:
        return sum(len(block) for block in self.blocks)

    def labels(self) -> list[int]:
        """Block index of every point."""
        result = [0] * self.n
        for index, block in enumerate(self.blocks):
            for point in block:
                result[point] = index
        return result

    def as_lists(self) -> list[list[int]]:
        return [list(block) for block in self.blocks]

    def to_json_dict(self) -> dict[str, Any]:
        return {"blocks": self.as_lists()}


class PartitionStats(BaseModel):
    """alpha(D), beta(D) and diam D of one partition.

    For a single block alpha is +inf (empty minimum) and beta is 0.
    """

    model_config = ConfigDict(frozen=True)

    alpha: float
    beta: float
    diam: float

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "alpha": "inf" if math.isinf(self.alpha) else self.alpha,
            "beta": self.beta,
            "diam": self.diam,
        }


ScoredPartition = tuple[Partition, PartitionStats]


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k)."""
    if n < 0 or k < 0:
        return 0
    row = [1] + [0] * k  # S(0, j)
    for i in range(1, n + 1):
        new = [0] * (k + 1)
        for j in range(1, min(i, k) + 1):
            new[j] = j * row[j] + row[j - 1]
        row = new
    return row[k]


def _restricted_growth_strings(n: int, k: int) -> Iterator[list[int]]:
    labels = [0] * n

    def extend(position: int, used: int) -> Iterator[list[int]]:
        if position == n:
            if used == k:
                yield labels
            return
        # leave room to open the blocks still missing
        if n - position < k - used:
            return
        for label in range(min(used + 1, k)):
            labels[position] = label
            yield from extend(position + 1, max(used, label + 1))

    yield from extend(1, 1)


def enumerate_partitions(n: int, k: int) -> Iterator[Partition]:
    """Yield every partition of 0..n-1 into exactly k blocks, S(n, k) in all.

    Raises:
        KOutOfRange: If not 1 <= k <= n
    """
    if not 1 <= k <= n:
        raise KOutOfRange(n, k)
    for labels in _restricted_growth_strings(n, k):
        yield Partition.from_labels(labels)


def _stats_from_labels(matrix: np.ndarray, labels: np.ndarray) -> PartitionStats:
    same = labels[:, None] == labels[None, :]
    cross = matrix[~same]
    if cross.size:
        alpha, beta = float(cross.min()), float(cross.max())
    else:
        alpha, beta = math.inf, 0.0
    return PartitionStats(alpha=alpha, beta=beta, diam=float(matrix[same].max()))


def partition_stats(space: FiniteMetricSpace, partition: Partition) -> PartitionStats:
    """Compute alpha(D), beta(D) and diam D.

    Raises:
        PartitionMismatch: If the partition is not over the space's indices
    """
    if partition.n != space.n:
        raise PartitionMismatch(
            f"Partition covers {partition.n} points but the space has {space.n}"
        )
    return _stats_from_labels(space.matrix, np.asarray(partition.labels()))


def scored_partitions(space: FiniteMetricSpace, k: int) -> list[ScoredPartition]:
    """Every partition into k blocks together with its stats, in enumeration order."""
    if not 1 <= k <= space.n:
        raise KOutOfRange(space.n, k)
    matrix = space.matrix
    scored = []
    for labels in _restricted_growth_strings(space.n, k):
        stats = _stats_from_labels(matrix, np.asarray(labels))
        scored.append((Partition.from_labels(labels), stats))
    logger.debug(f"Scored {len(scored)} partitions of {space.n} points into {k} blocks")
    return scored


def sigma_by_partitions(
    space: FiniteMetricSpace, k: int, with_witness: bool = False
) -> float | tuple[float, Partition | None]:
    """sigma_k = max{alpha(D) : D in D_{k+1}(X)}; 0 when k + 1 > n."""
    if k < 1:
        raise KOutOfRange(space.n, k)
    best, witness = 0.0, None
    if k + 1 <= space.n:
        best = -math.inf
        for partition, stats in scored_partitions(space, k + 1):
            if stats.alpha > best:
                best, witness = stats.alpha, partition
    return (best, witness) if with_witness else best


def Sigma_by_partitions(
    space: FiniteMetricSpace, k: int, with_witness: bool = False
) -> float | tuple[float, Partition | None]:
    """Sigma_k = min{beta(D) : D in D_{k+1}(X)}; +inf when k + 1 > n."""
    if k < 1:
        raise KOutOfRange(space.n, k)
    best, witness = math.inf, None
    if k + 1 <= space.n:
        for partition, stats in scored_partitions(space, k + 1):
            if stats.beta < best:
                best, witness = stats.beta, partition
    return (best, witness) if with_witness else best


def min_block_diameter(
    space: FiniteMetricSpace, m: int, with_witness: bool = False
) -> float | tuple[float, Partition | None]:
    """d_m(X) = min{diam D : D in D_m(X)}; +inf when m > n."""
    if m < 1:
        raise KOutOfRange(space.n, m)
    best, witness = math.inf, None
    if m <= space.n:
        for partition, stats in scored_partitions(space, m):
            if stats.diam < best:
                best, witness = stats.diam, partition
    return (best, witness) if with_witness else best


def _covers_with_cliques(adjacent: np.ndarray, m: int) -> bool:
    """Whether the points split into at most m cliques of the given graph."""
    n = adjacent.shape[0]
    cliques: list[list[int]] = []

    def place(vertex: int) -> bool:
        if vertex == n:
            return True
        for clique in cliques:
            if all(adjacent[vertex, other] for other in clique):
                clique.append(vertex)
                if place(vertex + 1):
                    return True
                clique.pop()
        if len(cliques) < m:
            cliques.append([vertex])
            if place(vertex + 1):
                return True
            cliques.pop()
        return False

    return place(0)


def clique_threshold(space: FiniteMetricSpace, m: int) -> float:
    """delta_m(X): least delta whose threshold graph G_delta(X) is an m-clique.

    Computed by binary search over the distinct distances with a clique-cover
    feasibility test, independently of the partition enumeration.
    """
    if m < 1:
        raise KOutOfRange(space.n, m)
    if m > space.n:
        return math.inf
    matrix = space.matrix
    candidates = np.unique(np.append(matrix[np.triu_indices(space.n, k=1)], 0.0))
    low, high = 0, len(candidates) - 1  # candidates[-1] = diam X is feasible
    while low < high:
        middle = (low + high) // 2
        if _covers_with_cliques(matrix <= candidates[middle], m):
            high = middle
        else:
            low = middle + 1
    return float(candidates[low])

