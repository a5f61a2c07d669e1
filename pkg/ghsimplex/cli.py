"""Command line interface for ghsimplex."""

import functools
import json
import logging
import sys
from collections.abc import Callable
from typing import Any

import click
import numpy as np

from .config import get_settings
from .core.exceptions import GHSimplexError, MetricAxiomError, VerificationMismatch
from .core.matrix_io import load_space
from .core.profile import random_family_parameters
from .tools import (
    distance_report,
    family_report,
    format_validation,
    render_profile,
    spectrum_report,
    validation_report,
    verify_space,
)

logger = logging.getLogger(__name__)

DEFAULT_FS = (13.5, 13.75, 14.0, 14.25, 14.5)

input_option = click.option(
    "--input",
    "input_path",
    required=True,
    type=click.Path(dir_okay=False),
    help="Distance matrix file (CSV or JSON)",
)


def _echo_json(data: Any) -> None:
    click.echo(json.dumps(data))


def handle_errors(command: Callable[..., None]) -> Callable[..., None]:
    """Print GHSimplexError messages to stderr and exit with their code."""

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> None:
        try:
            command(*args, **kwargs)
        except GHSimplexError as e:
            click.echo(f"Error: {e.message}", err=True)
            sys.exit(e.exit_code)

    return wrapper


@click.group()
@click.option(
    "--log-level",
    default=None,
    type=click.Choice(["error", "info", "debug"], case_sensitive=False),
    help="Logging level (defaults to GHSIMPLEX_LOG or info)",
)
def main(log_level: str | None) -> None:
    """Gromov-Hausdorff distances from finite metric spaces to simplexes."""
    level = log_level.upper() if log_level else get_settings().log_level_name()
    logging.basicConfig(
        level=getattr(logging, level),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )
    logger.debug(f"Log level set to: {level}")
    logger.debug(f"Settings: {get_settings().get_safe_dict()}")


@main.command()
@input_option
@handle_errors
def validate(input_path: str) -> None:
    """Check the metric axioms and print n, diam and eps."""
    try:
        space = load_space(input_path)
    except MetricAxiomError as e:
        click.echo(f"FAIL: {e.message}")
        sys.exit(e.exit_code)
    click.echo(format_validation(validation_report(space)))


@main.command()
@input_option
@handle_errors
def spectrum(input_path: str) -> None:
    """Print the mst- and xst-spectra with their spanning trees."""
    _echo_json(spectrum_report(load_space(input_path)))


@main.command()
@input_option
@click.option("--m", "m", required=True, type=int, help="Simplex size")
@click.option("--lambda", "lam", required=True, type=float, help="Simplex edge length")
@click.option("--halve", is_flag=True, help="Also print d_GH itself")
@click.option("--witness", is_flag=True, help="Print the witness partition or correspondence")
@handle_errors
def ghdist(input_path: str, m: int, lam: float, halve: bool, witness: bool) -> None:
    """Print 2*d_GH(lambda*Delta_m, X)."""
    _echo_json(distance_report(load_space(input_path), m, lam, halve=halve, witness=witness))


@main.command()
@input_option
@click.option("--m", "m", required=True, type=int, help="Simplex size, 2 <= m <= n")
@click.option("--T", "T", type=float, default=None, help="Right end of the domain (0, T]")
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["json", "csv"]),
    default="json",
    help="Output format",
)
@handle_errors
def profile(input_path: str, m: int, T: float | None, output_format: str) -> None:
    """Print the exact profile t -> 2*d_GH(t*Delta_m, X)."""
    click.echo(render_profile(load_space(input_path), m, T, output_format), nl=False)
    if output_format == "json":
        click.echo()


@main.command()
@input_option
@click.option("--grid", type=int, default=None, help="Number of lambda values")
@click.option("--max-m", "max_m", type=int, default=None, help="Largest simplex size (n+1)")
@click.option("--T", "T", type=float, default=None, help="Largest lambda")
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "json"]),
    default="text",
    help="Output format",
)
@handle_errors
def verify(
    input_path: str, grid: int | None, max_m: int | None, T: float | None, output_format: str
) -> None:
    """Audit the oracle, partition minimum, closed forms and profiles."""
    report = verify_space(load_space(input_path), grid=grid, max_m=max_m, T=T)
    if output_format == "json":
        _echo_json(report)
    else:
        for check in report["checks"]:
            click.echo(
                f"{check['status']} {check['check']} m={check['m']} "
                f"lambda={check['lambda']!r} expected={check['expected']!r} "
                f"actual={check['actual']!r}"
            )
        click.echo(f"{report['passed']} passed, {report['failed']} failed")
    if report["failed"]:
        raise VerificationMismatch(report["failed"], len(report["checks"]))


@main.command()
@click.option("--a", "a", type=float, default=10.0, help="|x1x2|")
@click.option("--b", "b", type=float, default=11.0, help="|x1x3|")
@click.option("--c", "c", type=float, default=12.0, help="|x2x3|")
@click.option("--d", "d", type=float, default=13.0, help="|x1x4| in S1")
@click.option("--e", "e", type=float, default=15.0, help="|x2x4|")
@click.option("--f", "fs", type=float, multiple=True, help="|x3x4| in S1 (repeatable)")
@click.option("--random", "use_random", is_flag=True, help="Draw admissible parameters")
@click.option("--f-count", "f_count", type=int, default=len(DEFAULT_FS), help="f values for --random")
@click.option("--seed", type=int, default=None, help="Seed for --random")
@handle_errors
def family(
    a: float,
    b: float,
    c: float,
    d: float,
    e: float,
    fs: tuple[float, ...],
    use_random: bool,
    f_count: int,
    seed: int | None,
) -> None:
    """Build the non-isometric equal-profile family and compare its members."""
    if use_random:
        rng = np.random.default_rng(get_settings().seed if seed is None else seed)
        params = random_family_parameters(rng, f_count=f_count)
        a, b, c, d, e, fs = params.a, params.b, params.c, params.d, params.e, params.fs
    _echo_json(family_report(a, b, c, d, e, list(fs or DEFAULT_FS)))


if __name__ == "__main__":
    main()
