"""Custom exceptions for ghsimplex.

Every error carries the process exit code the command line maps it to:
1 for unreadable input, 2 for validation and precondition failures,
3 for verification mismatches.
"""

EXIT_PARSE = 1
EXIT_INVALID = 2
EXIT_MISMATCH = 3


class GHSimplexError(Exception):
    """Base exception for ghsimplex errors."""

    def __init__(self, message: str, exit_code: int = EXIT_INVALID):
        super().__init__(message)
        self.message = message
        self.exit_code = exit_code


class MatrixParseError(GHSimplexError):
    """Raised when a matrix file cannot be parsed."""

    def __init__(self, message: str, source: str | None = None):
        if source:
            message = f"{source}: {message}"
        super().__init__(message, exit_code=EXIT_PARSE)
        self.source = source


class NonSquareMatrix(GHSimplexError):
    """Raised when the input grid is empty or not square."""

    def __init__(self, rows: int, row_lengths: list[int]):
        message = f"Matrix is not square: {rows} rows with lengths {row_lengths}"
        super().__init__(message)
        self.rows = rows
        self.row_lengths = row_lengths


class MetricAxiomError(GHSimplexError):
    """Base class for metric axiom violations; names the offending indices."""

    def __init__(self, message: str, indices: tuple[int, ...]):
        super().__init__(message)
        self.indices = indices


class AsymmetricMatrix(MetricAxiomError):
    """Raised when dist[i][j] != dist[j][i]."""

    def __init__(self, i: int, j: int, forward: float, backward: float):
        super().__init__(
            f"Asymmetric distances at ({i},{j}): {forward!r} != {backward!r}",
            (i, j),
        )


class NegativeDistance(MetricAxiomError):
    """Raised when an entry is negative."""

    def __init__(self, i: int, j: int, value: float):
        super().__init__(f"Negative distance at ({i},{j}): {value!r}", (i, j))


class NonzeroDiagonal(MetricAxiomError):
    """Raised when dist[i][i] != 0."""

    def __init__(self, i: int, value: float):
        super().__init__(f"Nonzero diagonal entry at ({i},{i}): {value!r}", (i, i))


class CoincidentPoints(MetricAxiomError):
    """Raised when two distinct indices are at distance zero."""

    def __init__(self, i: int, j: int):
        super().__init__(f"Distinct points ({i},{j}) are at zero distance", (i, j))


class NonFiniteDistance(MetricAxiomError):
    """Raised when an entry is NaN or infinite."""

    def __init__(self, i: int, j: int, value: float):
        super().__init__(f"Non-finite distance at ({i},{j}): {value!r}", (i, j))


class TriangleViolation(MetricAxiomError):
    """Raised when dist[i][k] > dist[i][j] + dist[j][k] beyond tolerance."""

    def __init__(self, i: int, j: int, k: int, excess: float):
        super().__init__(
            f"Triangle inequality violated for ({i},{j},{k}): "
            f"|x{i}x{k}| exceeds |x{i}x{j}|+|x{j}x{k}| by {excess!r}",
            (i, j, k),
        )
        self.excess = excess


class SinglePointSpace(GHSimplexError):
    """Raised when an operation needs at least two points."""

    def __init__(self, operation: str):
        super().__init__(f"{operation} requires at least two points")
        self.operation = operation


class NonpositiveScale(GHSimplexError):
    """Raised when a scale factor is not positive."""

    def __init__(self, factor: float):
        super().__init__(f"Scale factor must be positive, got {factor!r}")
        self.factor = factor


class DTooSmall(GHSimplexError):
    """Raised when d - X would not be a metric."""

    def __init__(self, d: float, required: float):
        super().__init__(
            f"Dual constant d={d!r} does not give a metric d - X "
            f"(needs d > diam X and d >= {required!r})"
        )
        self.d = d
        self.required = required


class EmptySet(GHSimplexError):
    """Raised when a point set is empty or has out-of-range members."""


class KOutOfRange(GHSimplexError):
    """Raised when a block count is outside 1..n."""

    def __init__(self, n: int, k: int):
        super().__init__(f"Block count k={k} must satisfy 1 <= k <= n={n}")
        self.n = n
        self.k = k


class PartitionMismatch(GHSimplexError):
    """Raised when a partition does not cover exactly the space's indices."""


class NotSurjective(GHSimplexError):
    """Raised when a relation misses some point of either space."""


class TooLarge(GHSimplexError):
    """Raised when the brute-force oracle guard is exceeded."""

    def __init__(self, cells: int, limit: int):
        super().__init__(
            f"Correspondence grid has {cells} cells; the oracle guard allows "
            f"at most {limit} (m*n <= {limit})"
        )
        self.cells = cells
        self.limit = limit


class InvalidSimplex(GHSimplexError):
    """Raised when a simplex has m < 1 or an edge length that is not positive and finite."""


class BlockCountMismatch(GHSimplexError):
    """Raised when a partition's block count differs from the simplex size."""

    def __init__(self, blocks: int, m: int):
        super().__init__(f"Partition has {blocks} blocks but the simplex has {m}")
        self.blocks = blocks
        self.m = m


class DimensionMismatch(GHSimplexError):
    """Raised when a closed form is asked for the wrong simplex size."""


class LambdaTooSmall(GHSimplexError):
    """Raised when lambda is below the large-lambda threshold."""


class LambdaTooLarge(GHSimplexError):
    """Raised when lambda is above the small-lambda threshold."""


class PreconditionFailed(GHSimplexError):
    """Raised when the hypotheses of a closed form do not hold."""


class MOutOfRange(GHSimplexError):
    """Raised when a profile is requested for m outside 2..n."""

    def __init__(self, m: int, n: int):
        super().__init__(f"Profile needs 2 <= m <= n, got m={m}, n={n}")
        self.m = m
        self.n = n


class OrderingViolated(GHSimplexError):
    """Raised when family parameters break a<b<c<d<f<e."""


class VerificationMismatch(GHSimplexError):
    """Raised when an audit finds a disagreement between methods."""

    def __init__(self, failures: int, checks: int):
        super().__init__(
            f"{failures} of {checks} verification checks failed",
            exit_code=EXIT_MISMATCH,
        )
        self.failures = failures
        self.checks = checks
