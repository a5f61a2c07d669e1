"""Minimum and maximum spanning trees and their edge-length spectra."""

import logging
from collections.abc import Iterable
from enum import Enum
from typing import Any

import numpy as np
from networkx.utils import UnionFind
from pydantic import BaseModel, ConfigDict

from .exceptions import SinglePointSpace
from .metric_space import FiniteMetricSpace
from .partitions import Partition

logger = logging.getLogger(__name__)


class TreeKind(str, Enum):
    """Spanning tree kind enumeration."""

    MINIMUM = "min"
    MAXIMUM = "max"


class SpectrumOrder(str, Enum):
    """Spectrum ordering enumeration."""

    DESCENDING = "descending"
    ASCENDING = "ascending"


Edge = tuple[int, int, float]


class SpanningTree(BaseModel):
    """A spanning tree on a finite metric space; edges are (i, j, length), i < j."""

    model_config = ConfigDict(frozen=True)

    edges: tuple[Edge, ...]
    kind: TreeKind

    @property
    def total(self) -> float:
        return float(sum(length for _, _, length in self.edges))

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset((i, j) for i, j, _ in self.edges)

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "edges": [[i, j, length] for i, j, length in self.edges],
            "total": self.total,
        }


class Spectrum(BaseModel):
    """Ordered edge lengths of a spanning tree (sigma descending, Sigma ascending)."""

    model_config = ConfigDict(frozen=True)

    values: tuple[float, ...]
    order: SpectrumOrder

    def __getitem__(self, index: int) -> float:
        return self.values[index]

    def __len__(self) -> int:
        return len(self.values)

    def as_list(self) -> list[float]:
        return list(self.values)


def _sorted_edges(
    space: FiniteMetricSpace, kind: TreeKind, rng: np.random.Generator | None
) -> list[Edge]:
    matrix = space.matrix
    edges = [
        (i, j, float(matrix[i, j]))
        for i in range(space.n)
        for j in range(i + 1, space.n)
    ]
    sign = 1.0 if kind is TreeKind.MINIMUM else -1.0
    if rng is None:
        return sorted(edges, key=lambda e: (sign * e[2], e[0], e[1]))
    # random tie-breaking among equal lengths
    tie_keys = rng.permutation(len(edges))
    ranked = sorted(zip(edges, tie_keys, strict=True), key=lambda p: (sign * p[0][2], p[1]))
    return [edge for edge, _ in ranked]


def _greedy_tree(
    space: FiniteMetricSpace, kind: TreeKind, rng: np.random.Generator | None
) -> SpanningTree:
    if space.n < 2:
        raise SinglePointSpace(f"{kind.value} spanning tree")
    components = UnionFind(range(space.n))
    accepted: list[Edge] = []
    for i, j, length in _sorted_edges(space, kind, rng):
        if components[i] != components[j]:
            components.union(i, j)
            accepted.append((i, j, length))
            if len(accepted) == space.n - 1:
                break
    logger.debug(f"Built {kind.value} spanning tree on {space.n} points: {accepted}")
    return SpanningTree(edges=tuple(accepted), kind=kind)


def minimum_spanning_tree(
    space: FiniteMetricSpace, rng: np.random.Generator | None = None
) -> SpanningTree:
    """Greedy minimum spanning tree (Kruskal with union-find).

    Args:
        space: Space with at least two points
        rng: Optional generator used to break length ties at random; by
            default ties are broken by lexicographic (i, j)

    Raises:
        SinglePointSpace: If the space has one point
    """
    return _greedy_tree(space, TreeKind.MINIMUM, rng)


def maximum_spanning_tree(
    space: FiniteMetricSpace, rng: np.random.Generator | None = None
) -> SpanningTree:
    """Greedy maximum spanning tree, built directly from a descending sort."""
    return _greedy_tree(space, TreeKind.MAXIMUM, rng)


def tree_length(tree: SpanningTree) -> float:
    """Total edge length: mst(M) for a minimum tree, xst(M) for a maximum one."""
    return tree.total


def mst_spectrum(space: FiniteMetricSpace) -> Spectrum:
    """MST edge lengths sorted descending, (sigma_1, ..., sigma_{n-1})."""
    tree = minimum_spanning_tree(space)
    values = sorted((length for _, _, length in tree.edges), reverse=True)
    return Spectrum(values=tuple(values), order=SpectrumOrder.DESCENDING)


def xst_spectrum(space: FiniteMetricSpace) -> Spectrum:
    """Maximum spanning tree edge lengths sorted ascending, (Sigma_1, ...)."""
    tree = maximum_spanning_tree(space)
    values = sorted(length for _, _, length in tree.edges)
    return Spectrum(values=tuple(values), order=SpectrumOrder.ASCENDING)


def forest_partition(
    n: int, tree: SpanningTree, removed: Iterable[tuple[int, int]]
) -> Partition:
    """Partition of the points into the vertex sets of tree minus some edges."""
    cut = {(min(i, j), max(i, j)) for i, j in removed}
    components = UnionFind(range(n))
    for i, j, _ in tree.edges:
        if (i, j) not in cut:
            components.union(i, j)
    groups: dict[int, list[int]] = {}
    for point in range(n):
        groups.setdefault(components[point], []).append(point)
    return Partition.from_blocks(groups.values())


def _ranked_edges(tree: SpanningTree, descending: bool) -> list[Edge]:
    sign = -1.0 if descending else 1.0
    return sorted(tree.edges, key=lambda e: (sign * e[2], e[0], e[1]))


def mst_cut_partition(space: FiniteMetricSpace, k: int) -> Partition:
    """Remove the k longest MST edges; the k+1 components D attain alpha(D) = sigma_k."""
    tree = minimum_spanning_tree(space)
    if not 0 <= k <= space.n - 1:
        raise ValueError(f"k must be in [0, {space.n - 1}], got {k}")
    longest = _ranked_edges(tree, descending=True)[:k]
    return forest_partition(space.n, tree, [(i, j) for i, j, _ in longest])


def xst_cut_partition(space: FiniteMetricSpace, k: int, longest: bool) -> Partition:
    """Remove the k longest (or shortest) maximum spanning tree edges.

    Removing the k longest gives blocks with diam <= Sigma_{n-k-1}; removing
    the k shortest gives blocks with pairwise |M_i M_j|' <= Sigma_k.
    """
    tree = maximum_spanning_tree(space)
    if not 0 <= k <= space.n - 1:
        raise ValueError(f"k must be in [0, {space.n - 1}], got {k}")
    chosen = _ranked_edges(tree, descending=longest)[:k]
    return forest_partition(space.n, tree, [(i, j) for i, j, _ in chosen])
