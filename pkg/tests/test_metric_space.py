"""Tests for validated finite metric spaces."""

import itertools

import numpy as np
import pytest

from ghsimplex.core.exceptions import (
    AsymmetricMatrix,
    CoincidentPoints,
    DTooSmall,
    EmptySet,
    NegativeDistance,
    NonFiniteDistance,
    NonpositiveScale,
    NonSquareMatrix,
    NonzeroDiagonal,
    SinglePointSpace,
    TriangleViolation,
)
from ghsimplex.core.metric_space import (
    PointSet,
    build_space,
    diameter,
    distance_vector,
    dual_space,
    dual_threshold,
    hausdorff_distance,
    min_positive_distance,
    random_metric_space,
    relabel,
    scale,
    set_distance_inf,
    set_distance_sup,
    simplex_space,
)


class TestBuildSpace:
    """Test metric axiom validation."""

    def test_single_point(self):
        space = build_space([[0]])
        assert space.n == 1
        assert diameter(space) == 0

    def test_valid_four_point(self, three_regime_space):
        assert three_regime_space.n == 4
        assert three_regime_space.dist[0][3] == 6.5

    def test_accepts_ndarray(self):
        space = build_space(np.array([[0.0, 1.5], [1.5, 0.0]]))
        assert space.dist == ((0.0, 1.5), (1.5, 0.0))

    def test_asymmetric(self):
        with pytest.raises(AsymmetricMatrix) as exc_info:
            build_space([[0, 1], [2, 0]])
        assert exc_info.value.indices == (0, 1)
        assert exc_info.value.exit_code == 2

    def test_negative(self):
        with pytest.raises(NegativeDistance) as exc_info:
            build_space([[0, -1], [-1, 0]])
        assert exc_info.value.indices == (0, 1)

    def test_nonzero_diagonal(self):
        with pytest.raises(NonzeroDiagonal) as exc_info:
            build_space([[0, 1], [1, 0.5]])
        assert exc_info.value.indices == (1, 1)

    def test_coincident_points(self):
        with pytest.raises(CoincidentPoints):
            build_space([[0, 0], [0, 0]])

    def test_non_finite(self):
        with pytest.raises(NonFiniteDistance):
            build_space([[0, float("inf")], [float("inf"), 0]])

    def test_triangle_violation(self):
        with pytest.raises(TriangleViolation) as exc_info:
            build_space([[0, 1, 5], [1, 0, 1], [5, 1, 0]])
        assert set(exc_info.value.indices) == {0, 1, 2}

    def test_triangle_within_tolerance(self):
        space = build_space([[0, 1, 2 + 1e-12], [1, 0, 1], [2 + 1e-12, 1, 0]])
        assert space.dist[0][2] == 2 + 1e-12

    def test_non_square(self):
        with pytest.raises(NonSquareMatrix):
            build_space([[0, 1], [1, 0], [1, 1]])
        with pytest.raises(NonSquareMatrix):
            build_space([])

    def test_equality_and_immutability(self, three_regime_space):
        copy = build_space(three_regime_space.matrix, label="three-regime")
        assert copy == three_regime_space
        copy.matrix[0, 1] = 100.0
        assert copy.dist[0][1] == 3


class TestScalars:
    """Test diameter, epsilon and the distance vector."""

    def test_diameter(self, three_regime_space, flat_bottom_space):
        assert diameter(three_regime_space) == 6.5
        assert diameter(flat_bottom_space) == 7

    def test_min_positive_distance(self, three_regime_space, flat_bottom_space):
        assert min_positive_distance(three_regime_space) == 3
        assert min_positive_distance(flat_bottom_space) == 2

    def test_min_positive_distance_single_point(self):
        with pytest.raises(SinglePointSpace):
            min_positive_distance(build_space([[0]]))

    def test_simplex_eps_equals_diameter(self):
        space = simplex_space(5, 2.5)
        assert min_positive_distance(space) == diameter(space) == 2.5

    def test_distance_vector(self, flat_bottom_space):
        assert distance_vector(flat_bottom_space) == [7, 6, 5, 4, 3, 2]


class TestScaleAndDual:
    """Test homothety and the dual space."""

    def test_scale_identity(self, three_regime_space):
        assert scale(three_regime_space, 1) == three_regime_space

    def test_scale_simplex(self):
        assert scale(simplex_space(3, 1), 2).dist == simplex_space(3, 2).dist

    def test_scale_diameter(self, flat_bottom_space):
        assert diameter(scale(flat_bottom_space, 0.5)) == 3.5

    def test_scale_nonpositive(self, flat_bottom_space):
        with pytest.raises(NonpositiveScale):
            scale(flat_bottom_space, 0)

    def test_scale_homothety(self, random_spaces):
        for space in random_spaces:
            for factor in (0.5, 2.0, 3.0):
                scaled = scale(space, factor)
                assert diameter(scaled) == pytest.approx(factor * diameter(space))
                assert min_positive_distance(scaled) == pytest.approx(
                    factor * min_positive_distance(space)
                )

    def test_dual_of_simplex(self):
        space = simplex_space(4, 1.5)
        assert dual_space(space, 3.0).dist == space.dist

    def test_dual_values(self, flat_bottom_space):
        assert distance_vector(dual_space(flat_bottom_space, 14)) == [12, 11, 10, 9, 8, 7]

    def test_dual_default_constant(self, flat_bottom_space):
        assert dual_space(flat_bottom_space) == dual_space(flat_bottom_space, 14)

    def test_dual_threshold(self, flat_bottom_space):
        assert dual_threshold(flat_bottom_space) == 9
        assert dual_threshold(simplex_space(3, 1.5)) == 1.5

    def test_dual_below_twice_diameter(self, flat_bottom_space):
        assert distance_vector(dual_space(flat_bottom_space, 9)) == [7, 6, 5, 4, 3, 2]
        assert distance_vector(dual_space(flat_bottom_space, 13)) == [11, 10, 9, 8, 7, 6]

    def test_dual_too_small(self, flat_bottom_space):
        with pytest.raises(DTooSmall) as exc_info:
            dual_space(flat_bottom_space, 8.5)
        assert exc_info.value.required == 9
        assert exc_info.value.exit_code == 2
        with pytest.raises(DTooSmall):
            dual_space(simplex_space(2, 3.0), 3.0)

    def test_dual_single_point(self):
        with pytest.raises(SinglePointSpace):
            dual_space(build_space([[0]]))

    def test_dual_involution(self, flat_bottom_space, random_spaces):
        for space in [flat_bottom_space, *random_spaces]:
            for d in (2 * diameter(space), 2 * diameter(space) + 0.25):
                assert dual_space(dual_space(space, d), d) == space

    def test_dual_of_dual_at_threshold(self, flat_bottom_space):
        dual = dual_space(flat_bottom_space, 9)
        assert dual_space(dual, 9) == flat_bottom_space

    @pytest.mark.slow
    def test_dual_involution_sweep(self, sweep_spaces):
        for space in sweep_spaces:
            d = 2 * diameter(space)
            assert dual_space(dual_space(space, d), d).dist == space.dist

    def test_dual_distance_vector_reverses(self, random_spaces):
        for space in random_spaces:
            d = 2 * diameter(space)
            expected = [d - v for v in reversed(distance_vector(space))]
            assert distance_vector(dual_space(space, d)) == expected


class TestSetDistances:
    """Test distances between point sets."""

    def test_inf_same_set(self, three_regime_space):
        assert set_distance_inf(three_regime_space, {1, 2}, {1, 2}) == 0

    def test_inf_values(self, three_regime_space):
        assert set_distance_inf(three_regime_space, {0}, {1, 2, 3}) == 3
        assert set_distance_inf(three_regime_space, {0, 1}, {2, 3}) == 3.5

    def test_sup_values(self, three_regime_space):
        assert set_distance_sup(three_regime_space, {2}, {2}) == 0
        single = PointSet(members=frozenset({0}))
        assert set_distance_sup(three_regime_space, single, {1, 2, 3}) == 6.5

    def test_sup_inf_duality(self, random_spaces):
        for space in random_spaces:
            d = 2 * diameter(space)
            dual = dual_space(space, d)
            for r in range(1, space.n):
                for a in itertools.combinations(range(space.n), r):
                    b = set(range(space.n)) - set(a)
                    assert set_distance_sup(space, a, b) == d - set_distance_inf(dual, a, b)

    @pytest.mark.slow
    def test_sup_inf_duality_sweep(self, sweep_spaces):
        for space in sweep_spaces:
            d = 2 * diameter(space)
            dual = dual_space(space, d)
            points = range(space.n)
            for r, s in itertools.product(range(1, space.n + 1), repeat=2):
                for a in itertools.combinations(points, r):
                    for b in itertools.combinations(points, s):
                        if set(a) & set(b):
                            continue
                        assert set_distance_sup(space, a, b) == d - set_distance_inf(
                            dual, a, b
                        )

    def test_sup_is_dual_of_inf_on_disjoint_sets(self, three_regime_space):
        d = 13.0
        dual = dual_space(three_regime_space, d)
        assert set_distance_sup(three_regime_space, {0, 1}, {2, 3}) == d - set_distance_inf(
            dual, {0, 1}, {2, 3}
        )

    def test_hausdorff_values(self, flat_bottom_space):
        assert hausdorff_distance(flat_bottom_space, {0}, {0}) == 0
        assert hausdorff_distance(flat_bottom_space, {0}, {0, 1}) == 2

    def test_hausdorff_by_definition(self, flat_bottom_space):
        matrix = flat_bottom_space.matrix
        a, b = [0, 3], [1, 2]
        expected = max(
            max(min(matrix[x, y] for y in b) for x in a),
            max(min(matrix[x, y] for x in a) for y in b),
        )
        assert hausdorff_distance(flat_bottom_space, a, b) == expected

    def test_hausdorff_is_metric(self, rng):
        space = random_metric_space(4, rng)
        subsets = [
            set(c) for r in range(1, 5) for c in itertools.combinations(range(4), r)
        ]
        for a, b in itertools.product(subsets, subsets):
            assert hausdorff_distance(space, a, b) == hausdorff_distance(space, b, a)
            assert (hausdorff_distance(space, a, b) == 0) == (a == b)
        for a, b, c in itertools.product(subsets, subsets, subsets):
            assert hausdorff_distance(space, a, c) <= (
                hausdorff_distance(space, a, b) + hausdorff_distance(space, b, c) + 1e-12
            )

    def test_empty_set(self, three_regime_space):
        with pytest.raises(EmptySet):
            set_distance_inf(three_regime_space, set(), {1})
        with pytest.raises(EmptySet):
            PointSet(members=frozenset())

    def test_out_of_range(self, three_regime_space):
        with pytest.raises(EmptySet):
            set_distance_sup(three_regime_space, {7}, {1})


class TestRandomAndRelabel:
    """Test random generation and relabelling."""

    def test_random_space_is_metric(self, rng):
        for n in range(1, 8):
            space = random_metric_space(n, rng)
            assert space.n == n
            if n > 1:
                assert min_positive_distance(space) >= 1
            assert diameter(space) <= 2

    def test_random_space_is_reproducible(self):
        first = random_metric_space(5, np.random.default_rng(3))
        second = random_metric_space(5, np.random.default_rng(3))
        assert first == second

    def test_relabel(self, three_regime_space):
        moved = relabel(three_regime_space, [3, 2, 1, 0])
        assert moved.dist[0][1] == three_regime_space.dist[3][2]
        assert diameter(moved) == diameter(three_regime_space)

    def test_relabel_rejects_non_permutation(self, three_regime_space):
        with pytest.raises(ValueError):
            relabel(three_regime_space, [0, 0, 1, 2])
