"""Profile export and the equal-profile family report."""

import itertools
import json
import logging
from typing import Any

from ..core.exceptions import GHSimplexError
from ..core.metric_space import FiniteMetricSpace
from ..core.profile import non_isometric_pair, profile_equal, simplex_profile
from ..core.simplex_distance import isometry_check

logger = logging.getLogger(__name__)


def render_profile(
    space: FiniteMetricSpace, m: int, T: float | None = None, output_format: str = "json"
) -> str:
    """Serialize the exact profile for m as JSON (pieces and samples) or CSV samples."""
    try:
        profile = simplex_profile(space, m, T)
    except GHSimplexError as e:
        logger.error(f"Cannot build profile for m={m}: {e.message}")
        raise
    if output_format == "csv":
        return profile.to_csv()
    return json.dumps(profile.to_json_dict())


def family_report(
    a: float, b: float, c: float, d: float, e: float, fs: list[float]
) -> dict[str, Any]:
    """Build S1 and S2 for every f and compare the whole family.

    Args:
        a, b, c, d, e: Shared distances with a < b < c < d < e
        fs: Values for the swapped distance, each with d < f < e

    Returns:
        Member matrices, isometry verdicts and the family-wide profile verdict

    Raises:
        OrderingViolated: If some f breaks a < b < c < d < f < e
        TriangleViolation: If some matrix is not a metric
    """
    members = []
    spaces: list[FiniteMetricSpace] = []
    for f in fs:
        try:
            first, second = non_isometric_pair(a, b, c, d, e, f)
        except GHSimplexError as err:
            logger.error(f"Invalid family member f={f!r}: {err.message}")
            raise
        left, right = first.space(label=f"S1(f={f!r})"), second.space(label=f"S2(f={f!r})")
        isometric, _ = isometry_check(left, right)
        members.append(
            {
                "f": f,
                "S1": left.to_json_dict()["dist"],
                "S2": right.to_json_dict()["dist"],
                "isometric": isometric,
            }
        )
        spaces.extend([left, right])

    non_isometric = not any(member["isometric"] for member in members)
    equal_profiles = all(
        profile_equal(left, right) for left, right in itertools.combinations(spaces, 2)
    )
    logger.info(
        f"Family of {len(spaces)} spaces: non-isometric={non_isometric}, "
        f"equal profiles={equal_profiles}"
    )
    return {
        "parameters": {"a": a, "b": b, "c": c, "d": d, "e": e, "f": list(fs)},
        "members": members,
        "non_isometric": non_isometric,
        "equal_profiles": equal_profiles,
        "summary": (
            f"non-isometric: {str(non_isometric).lower()}, "
            f"equal profiles: {str(equal_profiles).lower()}"
        ),
    }
