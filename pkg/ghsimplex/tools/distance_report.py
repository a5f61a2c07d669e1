"""Distance reports and the oracle-versus-formula audit."""

import logging
import math
from typing import Any

import numpy as np

from ..config import get_settings
from ..core.exceptions import GHSimplexError, TooLarge
from ..core.metric_space import FiniteMetricSpace, diameter, triangle_tolerance
from ..core.profile import default_horizon, simplex_profile
from ..core.simplex_distance import (
    SimplexSpec,
    closed_form,
    distortion,
    gh_bruteforce,
    gh_to_simplex,
    simplex_regimes,
)

logger = logging.getLogger(__name__)


def distance_report(
    space: FiniteMetricSpace,
    m: int,
    lam: float,
    halve: bool = False,
    witness: bool = False,
) -> dict[str, Any]:
    """2*d_GH(lam*Delta_m, X) with the method that produced it.

    Args:
        space: Source space
        m: Simplex size, at least 1
        lam: Simplex edge length, positive
        halve: Also report d_GH itself
        witness: Include the witness partition or correspondence

    Returns:
        ``{"two_dgh", ["dgh"], "method", "regimes", ["witness"]}``
    """
    try:
        simplex = SimplexSpec(m=m, lam=lam)
        result = gh_to_simplex(space, simplex)
        regimes = simplex_regimes(space, simplex)
    except GHSimplexError as e:
        logger.error(f"Cannot compute distance for m={m}, lambda={lam!r}: {e.message}")
        raise
    report = result.to_json_dict(include_dgh=halve)
    if not witness:
        report.pop("witness")
    report["regimes"] = [regime.value for regime in regimes]
    return report


def _check(
    name: str, m: int, t: float, expected: float, actual: float, tau: float
) -> dict[str, Any]:
    passed = math.isclose(expected, actual, rel_tol=0.0, abs_tol=tau)
    return {
        "check": name,
        "m": m,
        "lambda": t,
        "expected": expected,
        "actual": actual,
        "status": "PASS" if passed else "FAIL",
    }


def verify_space(
    space: FiniteMetricSpace,
    grid: int | None = None,
    max_m: int | None = None,
    T: float | None = None,
) -> dict[str, Any]:
    """Audit every method against the partition minimum on a lambda grid.

    For each m in 1..max_m and each lambda in the grid the partition minimum
    is compared with the correspondence oracle, with every applicable closed
    form, with the distortion of its own witness and, for 2 <= m <= n, with
    the exact profile.

    Raises:
        TooLarge: If n * max_m exceeds the oracle guard
    """
    settings = get_settings()
    grid = grid or settings.verify_grid
    max_m = max_m or space.n + 1
    if space.n * max_m > settings.bruteforce_cell_limit:
        logger.error(f"Space with n={space.n} is too large for the oracle up to m={max_m}")
        raise TooLarge(space.n * max_m, settings.bruteforce_cell_limit)
    T = T or default_horizon(space)
    lambdas = [float(t) for t in np.linspace(0.0, T, grid + 1)[1:]]

    checks: list[dict[str, Any]] = []
    for m in range(1, max_m + 1):
        profile = simplex_profile(space, m, T) if 2 <= m <= space.n else None
        for t in lambdas:
            simplex = SimplexSpec(m=m, lam=t)
            tau = triangle_tolerance(diameter(space) + t)
            result = gh_to_simplex(space, simplex)
            oracle = gh_bruteforce(simplex.space(), space)
            checks.append(_check("bruteforce", m, t, result.value, oracle.value, tau))
            relation = result.witness_correspondence()
            if relation is not None:
                realized = distortion(relation, simplex.space(), space)
                checks.append(_check("witness", m, t, result.value, realized, tau))
            for regime in simplex_regimes(space, simplex):
                formula = closed_form(space, simplex, regime)
                checks.append(_check(regime.value, m, t, result.value, formula.value, tau))
            if profile is not None:
                checks.append(_check("profile", m, t, result.value, profile.evaluate(t), tau))

    failed = sum(1 for check in checks if check["status"] == "FAIL")
    logger.info(f"Verified {len(checks)} checks, {failed} failed")
    return {"checks": checks, "passed": len(checks) - failed, "failed": failed}
