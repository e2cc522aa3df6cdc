"""The two basic state-update maps and their special cases.

Decoherence multiplies the state entrywise by the environment-response
overlap matrix.  Observation conditions the state on a perceived outcome k:
branch k occurs with probability p_k = sum_i rho_ii |S_ik|^2 and rescales the
state entrywise by the outer product of probing column k, normalized by p_k.
Averaging the observation branches over k reproduces decoherence with the row
Gram matrix S S^dagger, so the two maps are two faces of one interaction.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from . import matcore
from .errors import DimensionMismatchError, ShapeMismatchError, ValidationError
from .states import (
    DensityMatrix,
    GramMatrix,
    Outcome,
    OutcomeEnsemble,
    ProbingMatrix,
    ProjectorSet,
    PureState,
    ZERO_PROBABILITY,
)

#: G-S columns with residual norm below this are replaced by the next unused
#: basis vector when completing a unitary from its first column.
_SPAN_TOL = 1e-8

DEFAULT_TRIVIALITY_TOL = 1e-9


def decohere(rho: DensityMatrix, env_overlap: GramMatrix) -> DensityMatrix:
    """Entrywise product rho o E; suppresses off-diagonal structure."""
    return DensityMatrix(matcore.schur_product(rho.mat, env_overlap.mat))


def von_neumann_reduce(rho: DensityMatrix) -> DensityMatrix:
    """Keep only the diagonal of rho (decoherence with the identity overlap)."""
    return DensityMatrix(np.diag(rho.mat.diagonal()))


def response_gram(probe: ProbingMatrix) -> GramMatrix:
    """Row Gram matrix S S^dagger of a probing; unit rows give unit diagonal."""
    return GramMatrix(probe.mat @ probe.mat.conj().T)


def observe(rho: DensityMatrix, probe: ProbingMatrix) -> OutcomeEnsemble:
    """Condition rho on each perceived outcome.

    Branch k carries p_k = sum_i rho_ii |S_ik|^2 and the state with entries
    rho_ij S_ik S_jk^* / p_k.  Branches with p_k at or below the zero
    threshold are kept with probability exactly 0 and an undefined state.
    """
    if probe.n_object != rho.dim:
        raise ShapeMismatchError(
            "probing-rows-match-state",
            detail=f"probing has {probe.n_object} rows, state dim {rho.dim}",
        )
    populations = rho.mat.diagonal().real
    outcomes = []
    for k in range(probe.n_perception):
        column = probe.mat[:, k]
        p = float(populations @ (np.abs(column) ** 2))
        if p <= ZERO_PROBABILITY:
            outcomes.append(Outcome(0.0, None))
        else:
            mask = np.outer(column, column.conj())
            outcomes.append(Outcome(p, DensityMatrix(rho.mat * mask / p)))
    return OutcomeEnsemble(tuple(outcomes))


def ensemble_average(ensemble: OutcomeEnsemble) -> DensityMatrix:
    """Probability-weighted average sum_k p_k rho_k of the live branches."""
    live = ensemble.live()
    if not live:
        raise ValidationError("ensemble-has-live-outcome")
    total = np.zeros_like(live[0].state.mat)
    for outcome in live:
        total = total + outcome.probability * outcome.state.mat
    return DensityMatrix(total)


def luders(rho: DensityMatrix, projectors: ProjectorSet) -> DensityMatrix:
    """Pinching sum_k P_k rho P_k over a complete orthogonal projector family."""
    if projectors.dim != rho.dim:
        raise ShapeMismatchError(
            "projectors-match-state",
            detail=f"projector dim {projectors.dim}, state dim {rho.dim}",
        )
    total = np.zeros_like(rho.mat)
    for p in projectors:
        total = total + p @ rho.mat @ p
    return DensityMatrix(total)


def is_trivial_probing_for(
    rho: DensityMatrix, probe: ProbingMatrix, tol: float = DEFAULT_TRIVIALITY_TOL
) -> bool:
    """True when every live observation branch equals rho up to a unitary.

    For Hermitian matrices, equality up to a unitary is spectral equality, so
    the test compares each branch spectrum against the input spectrum
    componentwise within tol.
    """
    reference = matcore.hermitian_spectrum(rho.mat)
    for outcome in observe(rho, probe):
        if outcome.probability > ZERO_PROBABILITY:
            branch = matcore.hermitian_spectrum(outcome.state.mat)
            if matcore.max_abs(branch - reference) > tol:
                return False
    return True


def is_trivial_decoherence_for(
    rho: DensityMatrix, env_overlap: GramMatrix, tol: float = DEFAULT_TRIVIALITY_TOL
) -> bool:
    """True when rho o E has the same spectrum as rho within tol."""
    reference = matcore.hermitian_spectrum(rho.mat)
    after = matcore.hermitian_spectrum(decohere(rho, env_overlap).mat)
    return matcore.max_abs(after - reference) <= tol


def _complete_unitary_from_first_column(first: np.ndarray) -> np.ndarray:
    """Unitary whose first column is the given unit vector.

    Remaining columns come from Gram-Schmidt over the computational basis;
    basis vectors whose residual drops below the span threshold are skipped
    in favor of the next unused one.
    """
    dim = first.size
    columns = [first.astype(complex)]
    for j in range(dim):
        if len(columns) == dim:
            break
        candidate = np.zeros(dim, dtype=complex)
        candidate[j] = 1.0
        for col in columns:
            candidate = candidate - col * np.vdot(col, candidate)
        norm = float(np.linalg.norm(candidate))
        if norm < _SPAN_TOL:
            continue
        columns.append(candidate / norm)
    if len(columns) != dim:
        raise ValidationError("unitary-completion", detail="could not complete an orthonormal basis")
    return np.column_stack(columns)


def probing_joint_unitary(responses: Sequence[PureState]) -> np.ndarray:
    """Joint unitary realizing a probing on object (x) ancilla.

    Maps |o_i> (x) |first basis vector> to |o_i> (x) |response_i>; it is
    block-diagonal with one ancilla-space unitary per object index.  Tracing
    the evolved joint state over the ancilla reproduces decoherence with the
    Gram matrix of the responses.
    """
    if not responses:
        raise DimensionMismatchError("responses-nonempty")
    dim = responses[0].dim
    for idx, response in enumerate(responses):
        if response.dim != dim:
            raise DimensionMismatchError("responses-same-dim", detail=f"response {idx}")
    n = len(responses)
    joint = np.zeros((n * dim, n * dim), dtype=complex)
    for i, response in enumerate(responses):
        block = _complete_unitary_from_first_column(response.amp)
        joint[i * dim : (i + 1) * dim, i * dim : (i + 1) * dim] = block
    return joint
