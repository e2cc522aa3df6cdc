"""Validated value types for states and measurement data.

Construction performs full invariant checking; instances hold read-only
arrays and can be shared freely between threads.  A failed check raises a
:class:`~decobs.errors.ValidationError` subtype naming the invariant and the
measured residual.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import matcore
from .errors import (
    InvalidPartitionError,
    NormViolationError,
    NotDiagonalBasisError,
    ShapeMismatchError,
    ValidationError,
)

HERMITIAN_TOL = 1e-10
PSD_TOL = 1e-10
TRACE_TOL = 1e-10
UNIT_NORM_TOL = 1e-10
UNIT_DIAGONAL_TOL = 1e-10
IDEMPOTENT_TOL = 1e-9
ORTHOGONALITY_TOL = 1e-9
COMPLETENESS_TOL = 1e-9
PROBABILITY_SUM_TOL = 1e-10
NEGATIVE_PROBABILITY_TOL = 1e-12

#: Probabilities at or below this value are clamped to exactly zero and their
#: outcome states are exempt from validation.
ZERO_PROBABILITY = 1e-12


def _readonly(values, dtype=complex) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, positive-semidefinite, unit-trace complex matrix."""

    mat: np.ndarray

    def __post_init__(self):
        mat = matcore.require_square(self.mat)
        residual = matcore.hermiticity_residual(mat)
        if residual > HERMITIAN_TOL:
            raise ValidationError("density-hermitian", residual=residual)
        trace_residual = abs(complex(np.trace(mat)) - 1.0)
        if trace_residual > TRACE_TOL:
            raise ValidationError("density-unit-trace", residual=trace_residual)
        lowest = np.linalg.eigvalsh((mat + mat.conj().T) / 2.0)[0]
        if lowest < -PSD_TOL:
            raise ValidationError("density-psd", residual=float(-lowest))
        object.__setattr__(self, "mat", _readonly(mat))

    @property
    def dim(self) -> int:
        return self.mat.shape[0]


@dataclass(frozen=True)
class PureState:
    """Unit-norm complex column vector."""

    amp: np.ndarray

    def __post_init__(self):
        amp = np.asarray(self.amp, dtype=complex).ravel()
        if amp.size == 0 or not np.all(np.isfinite(amp)):
            raise ValidationError("pure-finite", detail="empty or non-finite amplitudes")
        residual = abs(float(np.linalg.norm(amp)) - 1.0)
        if residual > UNIT_NORM_TOL:
            raise NormViolationError("pure-unit-norm", residual=residual)
        object.__setattr__(self, "amp", _readonly(amp))

    @property
    def dim(self) -> int:
        return self.amp.size


@dataclass(frozen=True)
class GramMatrix:
    """Hermitian PSD matrix of pairwise overlaps with unit diagonal."""

    mat: np.ndarray

    def __post_init__(self):
        mat = matcore.require_square(self.mat)
        residual = matcore.hermiticity_residual(mat)
        if residual > HERMITIAN_TOL:
            raise ValidationError("gram-hermitian", residual=residual)
        diag_residual = matcore.max_abs(mat.diagonal() - 1.0)
        if diag_residual > UNIT_DIAGONAL_TOL:
            raise ValidationError("gram-unit-diagonal", residual=diag_residual)
        lowest = np.linalg.eigvalsh((mat + mat.conj().T) / 2.0)[0]
        if lowest < -PSD_TOL:
            raise ValidationError("gram-psd", residual=float(-lowest))
        object.__setattr__(self, "mat", _readonly(mat))

    @property
    def dim(self) -> int:
        return self.mat.shape[0]


@dataclass(frozen=True)
class ProbingMatrix:
    """Response-amplitude matrix with one unit-norm row per object state.

    Rows index object states (n of them), columns index the perception basis
    (m of them, not necessarily equal to n).  Unit rows guarantee that the
    row Gram matrix has unit diagonal.
    """

    mat: np.ndarray

    def __post_init__(self):
        mat = matcore.as_matrix(self.mat)
        norms = np.linalg.norm(mat, axis=1)
        residual = matcore.max_abs(norms - 1.0)
        if residual > UNIT_NORM_TOL:
            raise NormViolationError("probing-unit-rows", residual=residual)
        object.__setattr__(self, "mat", _readonly(mat))

    @property
    def n_object(self) -> int:
        return self.mat.shape[0]

    @property
    def n_perception(self) -> int:
        return self.mat.shape[1]


@dataclass(frozen=True)
class ProjectorSet:
    """Complete family of mutually orthogonal Hermitian projectors."""

    projectors: tuple[np.ndarray, ...]

    def __post_init__(self):
        mats = [matcore.require_square(p) for p in self.projectors]
        if not mats:
            raise ValidationError("projectors-nonempty")
        dim = mats[0].shape[0]
        total = np.zeros((dim, dim), dtype=complex)
        for idx, p in enumerate(mats):
            if p.shape[0] != dim:
                raise ShapeMismatchError("projectors-same-dim", detail=f"projector {idx}")
            residual = matcore.hermiticity_residual(p)
            if residual > HERMITIAN_TOL:
                raise ValidationError("projector-hermitian", residual=residual, detail=f"projector {idx}")
            residual = matcore.max_abs(p @ p - p)
            if residual > IDEMPOTENT_TOL:
                raise ValidationError("projector-idempotent", residual=residual, detail=f"projector {idx}")
            total += p
        for i in range(len(mats)):
            for j in range(i + 1, len(mats)):
                residual = matcore.max_abs(mats[i] @ mats[j])
                if residual > ORTHOGONALITY_TOL:
                    raise ValidationError(
                        "projectors-orthogonal", residual=residual, detail=f"pair ({i}, {j})"
                    )
        residual = matcore.max_abs(total - np.eye(dim))
        if residual > COMPLETENESS_TOL:
            raise ValidationError("projectors-complete", residual=residual)
        object.__setattr__(self, "projectors", tuple(_readonly(p) for p in mats))

    @property
    def dim(self) -> int:
        return self.projectors[0].shape[0]

    def __len__(self) -> int:
        return len(self.projectors)

    def __iter__(self):
        return iter(self.projectors)


@dataclass(frozen=True)
class Outcome:
    """One measurement branch: a probability and the conditioned state.

    ``state`` is None for zero-probability branches, whose conditioned state
    is undefined (0/0).
    """

    probability: float
    state: DensityMatrix | None


@dataclass(frozen=True)
class OutcomeEnsemble:
    """Probability-weighted collection of post-measurement states.

    Probabilities at or below :data:`ZERO_PROBABILITY` are clamped to exactly
    zero and their states are exempt from validation; every live branch must
    carry a valid :class:`DensityMatrix`.
    """

    outcomes: tuple[Outcome, ...]

    def __post_init__(self):
        cleaned = []
        for idx, out in enumerate(self.outcomes):
            p = float(out.probability)
            if not np.isfinite(p):
                raise ValidationError("outcome-probability-finite", detail=f"outcome {idx}")
            if p < -NEGATIVE_PROBABILITY_TOL:
                raise ValidationError("outcome-probability-nonnegative", residual=-p, detail=f"outcome {idx}")
            if p <= ZERO_PROBABILITY:
                cleaned.append(Outcome(0.0, out.state))
            else:
                if out.state is None:
                    raise ValidationError("outcome-state-missing", detail=f"outcome {idx} has p={p}")
                cleaned.append(out)
        total = sum(o.probability for o in cleaned)
        residual = abs(total - 1.0)
        if residual > PROBABILITY_SUM_TOL:
            raise ValidationError("probabilities-sum-to-one", residual=residual)
        object.__setattr__(self, "outcomes", tuple(cleaned))

    def live(self) -> tuple[Outcome, ...]:
        """Branches with nonzero probability."""
        return tuple(o for o in self.outcomes if o.probability > ZERO_PROBABILITY)

    def __len__(self) -> int:
        return len(self.outcomes)

    def __iter__(self):
        return iter(self.outcomes)


def basis_state(dim: int, index: int) -> PureState:
    """The computational basis vector |index> in the given dimension."""
    amp = np.zeros(dim, dtype=complex)
    amp[index] = 1.0
    return PureState(amp)


def maximally_mixed(dim: int) -> DensityMatrix:
    return DensityMatrix(np.eye(dim, dtype=complex) / dim)


def density_from_pure(state: PureState) -> DensityMatrix:
    """Rank-1 projector |v><v| of a pure state."""
    return DensityMatrix(np.outer(state.amp, state.amp.conj()))


def purity(rho: DensityMatrix) -> float:
    """tr(rho^2), between 1/dim and 1."""
    return float(np.trace(rho.mat @ rho.mat).real)


def gram_from_vectors(vectors: Sequence[PureState]) -> GramMatrix:
    """Overlap matrix E_ij = <v_j|v_i> of a family of unit vectors.

    Rows are renormalized exactly before forming the overlaps, so the result
    always carries an exactly unit diagonal.
    """
    if not vectors:
        raise ValidationError("gram-vectors-nonempty")
    dim = vectors[0].dim
    for idx, v in enumerate(vectors):
        if v.dim != dim:
            raise ShapeMismatchError("gram-vectors-same-dim", detail=f"vector {idx}")
    rows = np.array([v.amp / np.linalg.norm(v.amp) for v in vectors])
    return GramMatrix(rows @ rows.conj().T)


def gram_from_projectors(projectors: ProjectorSet) -> GramMatrix:
    """Block overlap matrix E_ij = sum_k (P_k)_ii (P_k)_jj of a diagonal partition.

    The projectors must be diagonal in the working basis; the result has ones
    in the square blocks they pick out and zeros elsewhere.
    """
    dim = projectors.dim
    total = np.zeros((dim, dim), dtype=complex)
    for idx, p in enumerate(projectors):
        off = p - np.diag(p.diagonal())
        residual = matcore.max_abs(off)
        if residual > HERMITIAN_TOL:
            raise NotDiagonalBasisError("projector-diagonal", residual=residual, detail=f"projector {idx}")
        d = p.diagonal().real
        total += np.outer(d, d)
    return GramMatrix(total)


def diagonal_projector_partition(block_sizes: Sequence[int]) -> ProjectorSet:
    """Diagonal block projectors of the given sizes, in order."""
    sizes = [int(s) for s in block_sizes]
    if not sizes or any(s < 1 for s in sizes):
        raise InvalidPartitionError("positive-block-sizes", detail=f"{sizes}")
    dim = sum(sizes)
    mats = []
    start = 0
    for size in sizes:
        diag = np.zeros(dim)
        diag[start : start + size] = 1.0
        mats.append(np.diag(diag).astype(complex))
        start += size
    return ProjectorSet(tuple(mats))
