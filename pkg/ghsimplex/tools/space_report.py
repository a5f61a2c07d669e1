"""Validation and spectrum reports for a single metric space."""

import logging
from typing import Any

from ..core.exceptions import GHSimplexError
from ..core.matrix_io import format_real, json_real
from ..core.metric_space import FiniteMetricSpace, diameter, min_positive_distance
from ..core.spanning import (
    maximum_spanning_tree,
    minimum_spanning_tree,
    mst_spectrum,
    xst_spectrum,
)

logger = logging.getLogger(__name__)


def validation_report(space: FiniteMetricSpace) -> dict[str, Any]:
    """Summarize a space that passed validation.

    Args:
        space: A validated space

    Returns:
        n, diam and eps (+inf for a single point) with status PASS
    """
    eps = min_positive_distance(space) if space.n > 1 else float("inf")
    return {
        "n": space.n,
        "diam": diameter(space),
        "eps": json_real(eps),
        "status": "PASS",
    }


def format_validation(report: dict[str, Any]) -> str:
    """One line such as ``n=4 diam=6.5 eps=3 PASS``."""
    eps = report["eps"]
    eps_text = eps if isinstance(eps, str) else format_real(eps)
    return f"n={report['n']} diam={format_real(report['diam'])} eps={eps_text} {report['status']}"


def spectrum_report(space: FiniteMetricSpace) -> dict[str, Any]:
    """Both spectra of a space with the spanning trees that witness them.

    Args:
        space: A validated space with at least two points

    Returns:
        ``{"sigma": [...], "Sigma": [...], "mst": {...}, "xst": {...}}``

    Raises:
        SinglePointSpace: If the space has one point
    """
    try:
        report = {
            "sigma": mst_spectrum(space).as_list(),
            "Sigma": xst_spectrum(space).as_list(),
            "mst": minimum_spanning_tree(space).to_json_dict(),
            "xst": maximum_spanning_tree(space).to_json_dict(),
        }
    except GHSimplexError as e:
        logger.error(f"Cannot compute spectra: {e.message}")
        raise
    logger.info(f"Computed spectra of a {space.n}-point space")
    return report
