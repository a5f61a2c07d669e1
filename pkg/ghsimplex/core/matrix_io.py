"""Reading and writing distance matrices as CSV or JSON."""

import csv
import io
import json
import logging
import math
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field, ValidationError, model_validator

from .exceptions import MatrixParseError
from .metric_space import FiniteMetricSpace, build_space

logger = logging.getLogger(__name__)


class MatrixDocument(BaseModel):
    """JSON matrix payload: ``{"n": int, "dist": [[...]], "label": str}``."""

    n: int = Field(ge=1, description="Point count")
    dist: list[list[float]] = Field(description="n x n distance grid")
    label: str | None = Field(default=None, description="Optional text tag")

    @model_validator(mode="after")
    def check_shape(self) -> "MatrixDocument":
        if len(self.dist) != self.n or any(len(row) != self.n for row in self.dist):
            raise ValueError(f"dist must be a {self.n}x{self.n} grid")
        return self


def format_real(value: float) -> str:
    """Shortest round-trip decimal; integral values print without '.0'."""
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if float(value).is_integer() and abs(value) < 1e16:
        return str(int(value))
    return repr(float(value))


def parse_csv(text: str, source: str | None = None) -> list[list[float]]:
    """Parse n rows of n comma-separated decimals."""
    rows: list[list[float]] = []
    reader = csv.reader(io.StringIO(text))
    for line_no, record in enumerate(reader, start=1):
        cells = [cell.strip() for cell in record]
        if not cells or all(not cell for cell in cells):
            continue
        try:
            values = [float(cell) for cell in cells]
        except ValueError as e:
            raise MatrixParseError(f"line {line_no}: {e}", source) from e
        if not all(math.isfinite(v) for v in values):
            raise MatrixParseError(f"line {line_no}: non-finite value", source)
        rows.append(values)
    if not rows:
        raise MatrixParseError("no matrix rows found", source)
    if any(len(row) != len(rows) for row in rows):
        raise MatrixParseError(
            f"expected {len(rows)} values per row, got {[len(r) for r in rows]}",
            source,
        )
    return rows


def parse_json(text: str, source: str | None = None) -> MatrixDocument:
    """Parse the JSON matrix object."""
    try:
        document = MatrixDocument.model_validate_json(text)
    except ValidationError as e:
        raise MatrixParseError(f"invalid JSON matrix: {e.errors()[0]['msg']}", source) from e
    for row in document.dist:
        if not all(math.isfinite(v) for v in row):
            raise MatrixParseError("non-finite value in dist", source)
    return document


def loads_space(text: str, source: str | None = None) -> FiniteMetricSpace:
    """Parse CSV or JSON text (detected by content) into a validated space.

    Raises:
        MatrixParseError: If the text is neither a CSV grid nor a JSON matrix
        MetricAxiomError: If the parsed matrix is not a metric
    """
    stripped = text.strip()
    if not stripped:
        raise MatrixParseError("empty input", source)
    if stripped.startswith("{"):
        document = parse_json(stripped, source)
        logger.debug(f"Parsed JSON matrix with n={document.n} from {source}")
        return build_space(document.dist, label=document.label)
    rows = parse_csv(stripped, source)
    logger.debug(f"Parsed CSV matrix with n={len(rows)} from {source}")
    return build_space(rows, label=Path(source).stem if source else None)


def load_space(path: str | Path) -> FiniteMetricSpace:
    """Read a CSV or JSON matrix file into a validated space."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise MatrixParseError(f"cannot read file: {e}", str(path)) from e
    except UnicodeDecodeError as e:
        raise MatrixParseError(f"not UTF-8 text: {e.reason} at byte {e.start}", str(path)) from e
    return loads_space(text, str(path))


def dumps_csv(space: FiniteMetricSpace) -> str:
    """Write the matrix as CSV with shortest round-trip decimals."""
    return "".join(",".join(format_real(v) for v in row) + "\n" for row in space.dist)


def dumps_json(space: FiniteMetricSpace) -> str:
    """Write the matrix as the documented JSON object."""
    return json.dumps(space.to_json_dict())


def json_real(value: float) -> Any:
    """JSON-safe real: infinities become the string "inf"."""
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return value
