"""Pytest configuration and fixtures."""

import numpy as np
import pytest

from ghsimplex.config import reload_settings
from ghsimplex.core.metric_space import build_space, random_metric_space
from ghsimplex.core.profile import non_isometric_pair


def four_point_matrix(a, b, c, d, e, f):
    """|x1x2|=a, |x1x3|=b, |x2x3|=c, |x1x4|=d, |x2x4|=e, |x3x4|=f."""
    return [
        [0, a, b, d],
        [a, 0, c, e],
        [b, c, 0, f],
        [d, e, f, 0],
    ]


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Every test starts from default settings."""
    for name in [
        "GHSIMPLEX_LOG",
        "GHSIMPLEX_SEED",
        "GHSIMPLEX_VALIDATION_RTOL",
        "GHSIMPLEX_PROFILE_TOLERANCE",
        "GHSIMPLEX_BRUTEFORCE_CELL_LIMIT",
        "GHSIMPLEX_PROFILE_SAMPLES",
        "GHSIMPLEX_VERIFY_GRID",
    ]:
        monkeypatch.delenv(name, raising=False)
    reload_settings()
    yield
    reload_settings()


@pytest.fixture
def three_regime_space():
    """Four points whose m=2 profile has three regimes (a..f = 3, 4, 5, 6.5, 3.5, 6)."""
    return build_space(four_point_matrix(3, 4, 5, 6.5, 3.5, 6), label="three-regime")


@pytest.fixture
def flat_bottom_space():
    """Four points whose m=2 profile is max{4, t-5, 7-t} (a..f = 2..7)."""
    return build_space(four_point_matrix(2, 3, 4, 5, 6, 7), label="flat-bottom")


@pytest.fixture
def family_pair():
    """S1 and S2 for the default family parameters with f = 14."""
    first, second = non_isometric_pair(10, 11, 12, 13, 15, 14)
    return first.space(label="S1"), second.space(label="S2")


@pytest.fixture
def rng():
    """Seeded generator."""
    return np.random.default_rng(20240607)


@pytest.fixture
def random_spaces(rng):
    """A handful of random dyadic spaces with 2 to 5 points."""
    return [random_metric_space(n, rng) for n in (2, 3, 3, 4, 4, 5)]


@pytest.fixture
def matrix_file(tmp_path, three_regime_space):
    """The three-regime space written as CSV."""
    from ghsimplex.core.matrix_io import dumps_csv

    path = tmp_path / "three_regime.csv"
    path.write_text(dumps_csv(three_regime_space))
    return path


@pytest.fixture(scope="session")
def sweep_spaces():
    """Fifty random dyadic spaces cycling through 2 to 6 points."""
    generator = np.random.default_rng(1406)
    return [random_metric_space(2 + index % 5, generator) for index in range(50)]


@pytest.fixture(scope="session")
def clique_spaces():
    """Fifty random spaces cycling through 1 to 7 points on a coarse grid."""
    generator = np.random.default_rng(7140)
    return [
        random_metric_space(1 + index % 7, generator, resolution=8) for index in range(50)
    ]
