"""Tests for spanning trees and spectra."""

import itertools

import numpy as np
import pytest

from ghsimplex.core.exceptions import SinglePointSpace
from ghsimplex.core.metric_space import (
    build_space,
    diameter,
    dual_space,
    random_metric_space,
    set_distance_inf,
    simplex_space,
)
from ghsimplex.core.partitions import partition_stats
from ghsimplex.core.spanning import (
    TreeKind,
    forest_partition,
    maximum_spanning_tree,
    minimum_spanning_tree,
    mst_cut_partition,
    mst_spectrum,
    tree_length,
    xst_cut_partition,
    xst_spectrum,
)


class TestTrees:
    """Test greedy tree construction."""

    def test_simplex_tree_length(self):
        space = simplex_space(3, 1)
        assert tree_length(minimum_spanning_tree(space)) == 2
        assert tree_length(maximum_spanning_tree(space)) == 2

    def test_minimum_tree(self, three_regime_space):
        tree = minimum_spanning_tree(three_regime_space)
        assert tree.kind is TreeKind.MINIMUM
        assert tree.edge_set() == {(0, 1), (1, 3), (0, 2)}
        assert tree.total == 10.5

    def test_minimum_tree_is_path(self, family_pair):
        _, second = family_pair
        assert minimum_spanning_tree(second).edge_set() == {(0, 1), (0, 2), (2, 3)}

    def test_maximum_tree_is_star(self, flat_bottom_space):
        tree = maximum_spanning_tree(flat_bottom_space)
        assert tree.edge_set() == {(2, 3), (1, 3), (0, 3)}
        assert tree.to_json_dict()["total"] == 18

    def test_single_point(self):
        with pytest.raises(SinglePointSpace):
            minimum_spanning_tree(build_space([[0]]))
        with pytest.raises(SinglePointSpace):
            xst_spectrum(build_space([[0]]))

    def test_maximum_tree_is_dual_minimum_tree(self, random_spaces):
        for space in random_spaces:
            dual = dual_space(space, 2 * diameter(space))
            assert (
                maximum_spanning_tree(space).edge_set()
                == minimum_spanning_tree(dual).edge_set()
            )

    def test_minimum_tree_is_minimal(self, rng):
        space = random_metric_space(4, rng)
        matrix = space.matrix
        edges = list(itertools.combinations(range(4), 2))
        best = np.inf
        for chosen in itertools.combinations(edges, 3):
            nodes = {0}
            for _ in range(3):
                nodes |= {j for i, j in chosen if i in nodes} | {
                    i for i, j in chosen if j in nodes
                }
            if len(nodes) == 4:
                best = min(best, sum(matrix[i, j] for i, j in chosen))
        assert tree_length(minimum_spanning_tree(space)) == pytest.approx(best)


class TestSpectra:
    """Test mst- and xst-spectra."""

    def test_three_regime_spectra(self, three_regime_space):
        assert mst_spectrum(three_regime_space).as_list() == [4, 3.5, 3]
        assert xst_spectrum(three_regime_space).as_list() == [5, 6, 6.5]

    def test_flat_bottom_spectra(self, flat_bottom_space):
        assert mst_spectrum(flat_bottom_space).as_list() == [5, 3, 2]
        assert xst_spectrum(flat_bottom_space).as_list() == [5, 6, 7]

    def test_simplex_spectra(self):
        space = simplex_space(4, 1.5)
        assert mst_spectrum(space).as_list() == [1.5, 1.5, 1.5]
        assert xst_spectrum(space).as_list() == [1.5, 1.5, 1.5]

    def test_tie_breaking_does_not_change_spectrum(self):
        rng = np.random.default_rng(11)
        space = random_metric_space(7, rng, resolution=4)
        expected = mst_spectrum(space).as_list()
        for _ in range(20):
            tree = minimum_spanning_tree(space, rng=rng)
            assert sorted((e[2] for e in tree.edges), reverse=True) == expected
            tree = maximum_spanning_tree(space, rng=rng)
            assert sorted(e[2] for e in tree.edges) == xst_spectrum(space).as_list()

    def test_dual_spectra_sum(self, random_spaces):
        for space in random_spaces:
            d = 2 * diameter(space) + 1
            dual = dual_space(space, d)
            sums = [
                x + y
                for x, y in zip(
                    xst_spectrum(dual).as_list(),
                    mst_spectrum(space).as_list(),
                    strict=True,
                )
            ]
            assert sums == [d] * (space.n - 1)

    @pytest.mark.slow
    def test_dual_spectra_sum_sweep(self, sweep_spaces):
        for space in sweep_spaces:
            d = 2 * diameter(space)
            dual = dual_space(space, d)
            sums = [
                x + y
                for x, y in zip(
                    xst_spectrum(dual).as_list(),
                    mst_spectrum(space).as_list(),
                    strict=True,
                )
            ]
            assert sums == [d] * (space.n - 1)
            assert (
                maximum_spanning_tree(space).total
                == (space.n - 1) * d - minimum_spanning_tree(dual).total
            )


class TestForests:
    """Test partitions cut out of spanning trees."""

    def test_mst_edges_are_exact(self, random_spaces):
        for space in random_spaces:
            tree = minimum_spanning_tree(space)
            for i, j, length in tree.edges:
                blocks = forest_partition(space.n, tree, [(i, j)]).blocks
                assert set_distance_inf(space, blocks[0], blocks[1]) == length

    def test_mst_cut_partition_alpha(self, rng):
        for n in range(2, 7):
            space = random_metric_space(n, rng)
            sigma = mst_spectrum(space)
            for k in range(1, n):
                partition = mst_cut_partition(space, k)
                assert partition.k == k + 1
                assert partition_stats(space, partition).alpha == sigma[k - 1]

    def test_xst_longest_cut_bounds_block_diameters(self, rng):
        for n in range(2, 8):
            space = random_metric_space(n, rng)
            Sigma = xst_spectrum(space)
            for k in range(1, n - 1):
                partition = xst_cut_partition(space, k, longest=True)
                assert partition_stats(space, partition).diam <= Sigma[n - k - 2]

    def test_xst_shortest_cut_bounds_block_spread(self, rng):
        for n in range(2, 8):
            space = random_metric_space(n, rng)
            Sigma = xst_spectrum(space)
            for k in range(1, n):
                partition = xst_cut_partition(space, k, longest=False)
                assert partition_stats(space, partition).beta <= Sigma[k - 1]
