"""Ancilla-dilated generalized measurements.

A measurement is specified by an ancilla state, a joint unitary on
object (x) ancilla (object factor first), and a complete orthogonal set of
joint projectors.  Applying it projects the evolved joint state on each
branch, traces out the ancilla, and normalizes.

Purity preservation is a structural property of the joint projectors: the map
sends every pure state to pure branch states exactly when each projector is
identity-on-object tensor a rank-1 ancilla projector, for some orthonormal
ancilla family.  The classification here assumes the canonical presentation
with a pure ancilla; a mixed ancilla is handled by lifting through a
purifier when the measurement is applied.

Two fixed reference measurements break the entropy inequalities in opposite
directions: a joint Bell-basis readout raises the expected entropy of a pure
input, and a swap-then-read ancilla overwrite erases a maximally mixed input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import matcore, processes
from .errors import DimensionMismatchError, ValidationError
from .states import (
    DensityMatrix,
    Outcome,
    OutcomeEnsemble,
    ProjectorSet,
    PureState,
    ZERO_PROBABILITY,
    basis_state,
    density_from_pure,
    maximally_mixed,
    purity,
)

UNITARY_TOL = 1e-10

#: Residual threshold for the structural purity-preservation test; looser than
#: construction tolerances because it compares products of validated objects.
PPPOVM_TOL = 1e-8

_PURE_ANCILLA_THRESHOLD = 1e-9


@dataclass(frozen=True)
class Povm:
    """Ancilla state + joint unitary + joint projector family."""

    object_dim: int
    ancilla_dim: int
    ancilla_state: DensityMatrix
    joint_unitary: np.ndarray
    joint_projectors: ProjectorSet

    def __post_init__(self):
        if self.object_dim < 1 or self.ancilla_dim < 1:
            raise DimensionMismatchError("positive-dims")
        joint_dim = self.object_dim * self.ancilla_dim
        if self.ancilla_state.dim != self.ancilla_dim:
            raise DimensionMismatchError(
                "ancilla-state-dim",
                detail=f"state dim {self.ancilla_state.dim}, declared {self.ancilla_dim}",
            )
        unitary = matcore.require_square(self.joint_unitary)
        if unitary.shape[0] != joint_dim:
            raise DimensionMismatchError(
                "joint-unitary-dim", detail=f"got {unitary.shape[0]}, expected {joint_dim}"
            )
        if not matcore.is_unitary(unitary, UNITARY_TOL):
            residual = matcore.max_abs(unitary.conj().T @ unitary - np.eye(joint_dim))
            raise ValidationError("joint-unitary", residual=residual)
        if self.joint_projectors.dim != joint_dim:
            raise DimensionMismatchError(
                "joint-projectors-dim",
                detail=f"got {self.joint_projectors.dim}, expected {joint_dim}",
            )
        frozen = np.array(unitary, dtype=complex)
        frozen.setflags(write=False)
        object.__setattr__(self, "joint_unitary", frozen)

    @property
    def joint_dim(self) -> int:
        return self.object_dim * self.ancilla_dim


def purify_ancilla(ancilla_state: DensityMatrix) -> PureState:
    """Pure state on a doubled space whose first-factor reduction is the input.

    Built from the eigendecomposition sum_i w_i |a_i><a_i| as
    sum_i sqrt(w_i) |a_i> (x) |a_i>.
    """
    sym = (ancilla_state.mat + ancilla_state.mat.conj().T) / 2.0
    weights, vectors = np.linalg.eigh(sym)
    weights = np.clip(weights[::-1], 0.0, None)
    vectors = vectors[:, ::-1]
    dim = ancilla_state.dim
    amp = np.zeros(dim * dim, dtype=complex)
    for i in range(dim):
        amp += np.sqrt(weights[i]) * np.kron(vectors[:, i], vectors[:, i])
    return PureState(amp / np.linalg.norm(amp))


def apply_povm(rho: DensityMatrix, measurement: Povm) -> OutcomeEnsemble:
    """Measure rho: evolve rho (x) ancilla by the joint unitary, project each
    branch, trace out the ancilla, and normalize.

    A mixed ancilla is lifted through a purifier first (joint unitary and
    projectors act trivially on the purifier), which leaves every branch
    unchanged.  Branch k has p_k = tr of the projected reduced matrix;
    branches at or below the zero threshold keep p = 0 and no state.
    """
    if rho.dim != measurement.object_dim:
        raise DimensionMismatchError(
            "state-object-dim",
            detail=f"state dim {rho.dim}, object dim {measurement.object_dim}",
        )
    if purity(measurement.ancilla_state) >= 1.0 - _PURE_ANCILLA_THRESHOLD:
        ancilla = measurement.ancilla_state.mat
        unitary = measurement.joint_unitary
        projector_list = list(measurement.joint_projectors)
        ancilla_dim = measurement.ancilla_dim
    else:
        purified = purify_ancilla(measurement.ancilla_state)
        ancilla = np.outer(purified.amp, purified.amp.conj())
        eye = np.eye(measurement.ancilla_dim, dtype=complex)
        unitary = np.kron(measurement.joint_unitary, eye)
        projector_list = [np.kron(p, eye) for p in measurement.joint_projectors]
        ancilla_dim = measurement.ancilla_dim**2

    joint = matcore.tensor_product(rho.mat, ancilla)
    evolved = unitary @ joint @ unitary.conj().T
    outcomes = []
    for projector in projector_list:
        projected = projector @ evolved @ projector
        reduced = matcore.partial_trace(projected, rho.dim, ancilla_dim, keep="first")
        p = float(np.trace(reduced).real)
        if p <= ZERO_PROBABILITY:
            outcomes.append(Outcome(0.0, None))
        else:
            outcomes.append(Outcome(p, DensityMatrix(reduced / p)))
    return OutcomeEnsemble(tuple(outcomes))


def ancilla_factors(measurement: Povm, tol: float = PPPOVM_TOL) -> list[np.ndarray] | None:
    """Recover the per-branch ancilla vectors of a purity-preserving measurement.

    Returns one unit vector per joint projector when every projector factors
    as identity-on-object tensor a rank-1 ancilla projector and the recovered
    vectors are mutually orthonormal within tol; None otherwise.
    """
    n = measurement.object_dim
    d = measurement.ancilla_dim
    vectors = []
    for projector in measurement.joint_projectors:
        reduced = matcore.partial_trace(projector, n, d, keep="second") / n
        sym = (reduced + reduced.conj().T) / 2.0
        _, eigvecs = np.linalg.eigh(sym)
        candidate = eigvecs[:, -1]
        rank_one = np.outer(candidate, candidate.conj())
        if matcore.max_abs(reduced - rank_one) > tol:
            return None
        if matcore.max_abs(matcore.tensor_product(np.eye(n), rank_one) - projector) > tol:
            return None
        vectors.append(candidate)
    overlaps = np.array([[np.vdot(u, v) for v in vectors] for u in vectors])
    if matcore.max_abs(overlaps - np.eye(len(vectors))) > tol:
        return None
    return vectors


def is_purity_preserving(measurement: Povm, tol: float = PPPOVM_TOL) -> bool:
    """Structural test: every joint projector is identity-on-object tensor a
    rank-1 projector onto one member of an orthonormal ancilla family."""
    return ancilla_factors(measurement, tol) is not None


def probing_as_povm(responses: Sequence[PureState]) -> Povm:
    """Lift a probing (given by its per-object-state ancilla responses) to a
    measurement: block unitary from the responses, ancilla prepared in the
    first basis vector, and pointer projectors identity (x) |k><k|."""
    if not responses:
        raise DimensionMismatchError("responses-nonempty")
    d = responses[0].dim
    n = len(responses)
    eye = np.eye(n, dtype=complex)
    projectors = tuple(
        matcore.tensor_product(eye, np.outer(basis_state(d, k).amp, basis_state(d, k).amp.conj()))
        for k in range(d)
    )
    return Povm(
        object_dim=n,
        ancilla_dim=d,
        ancilla_state=density_from_pure(basis_state(d, 0)),
        joint_unitary=processes.probing_joint_unitary(responses),
        joint_projectors=ProjectorSet(projectors),
    )


def counterexample_1() -> tuple[Povm, DensityMatrix]:
    """Joint Bell-basis readout of a qubit and a fresh ancilla qubit.

    Applied to the pure input |0><0| it yields two equiprobable maximally
    mixed branches (and two dead branches), so the expected entropy rises
    from 0 to ln 2: the observation inequality fails for this measurement.
    The entangled projectors do not factor, so it is not purity preserving.
    """
    s = 1.0 / np.sqrt(2.0)
    bell = [
        np.array([s, 0.0, 0.0, s], dtype=complex),
        np.array([s, 0.0, 0.0, -s], dtype=complex),
        np.array([0.0, s, s, 0.0], dtype=complex),
        np.array([0.0, s, -s, 0.0], dtype=complex),
    ]
    projectors = ProjectorSet(tuple(np.outer(v, v.conj()) for v in bell))
    measurement = Povm(
        object_dim=2,
        ancilla_dim=2,
        ancilla_state=density_from_pure(basis_state(2, 0)),
        joint_unitary=np.eye(4, dtype=complex),
        joint_projectors=projectors,
    )
    return measurement, density_from_pure(basis_state(2, 0))


def counterexample_2() -> tuple[Povm, DensityMatrix]:
    """Swap the object with a fresh ancilla, then read the ancilla.

    Applied to the maximally mixed input both branches are the fixed pure
    state |0><0| with probability 1/2 each, so the averaged state's entropy
    drops from ln 2 to 0: the decoherence inequality fails.  The pointer
    projectors factor, so this measurement is purity preserving.
    """
    swap = np.zeros((4, 4), dtype=complex)
    swap[0, 0] = swap[3, 3] = 1.0
    swap[1, 2] = swap[2, 1] = 1.0
    projectors = ProjectorSet(
        (
            np.diag([1.0, 0.0, 1.0, 0.0]).astype(complex),
            np.diag([0.0, 1.0, 0.0, 1.0]).astype(complex),
        )
    )
    measurement = Povm(
        object_dim=2,
        ancilla_dim=2,
        ancilla_state=density_from_pure(basis_state(2, 0)),
        joint_unitary=swap,
        joint_projectors=projectors,
    )
    return measurement, maximally_mixed(2)
