"""Exception types for structural validation failures.

Every error names the violated invariant and, where it makes sense, carries
the measured residual, so randomized campaigns can report what failed and by
how much.
"""

from __future__ import annotations


class ValidationError(ValueError):
    """An input violates a structural invariant."""

    def __init__(self, invariant: str, residual: float | None = None, detail: str = ""):
        self.invariant = invariant
        self.residual = residual
        msg = invariant
        if residual is not None:
            msg = f"{msg} (residual {residual:.3e})"
        if detail:
            msg = f"{msg}: {detail}"
        super().__init__(msg)


class NotSquareError(ValidationError):
    """A square matrix was required."""


class NotHermitianError(ValidationError):
    """Hermiticity residual exceeds the allowed tolerance."""


class ShapeMismatchError(ValidationError):
    """Two operands have incompatible shapes."""


class DimensionMismatchError(ValidationError):
    """A dimension does not factor or match as required."""


class NotDiagonalBasisError(ValidationError):
    """Projectors were required to be diagonal in the working basis."""


class NormViolationError(ValidationError):
    """A vector or matrix row is not normalized."""


class NotADistributionError(ValidationError):
    """A real sequence is not a probability distribution."""


class InvalidPartitionError(ValidationError):
    """Block sizes do not partition the stated dimension."""
