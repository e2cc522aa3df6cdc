"""JSON wire formats shared by the library and the command-line harness.

A complex matrix is ``{"rows": r, "cols": c, "data": [[re, im], ...]}`` with
row-major flat data.  Typed values add a ``"kind"`` tag:

* ``"density"`` / ``"gram"`` / ``"probing"`` -- one matrix;
* ``"pure"`` -- an n x 1 column matrix;
* ``"projector_set"`` -- ``{"kind": ..., "projectors": [matrix, ...]}``;
* ``"ensemble"`` -- ``{"kind": ..., "outcomes": [{"p": real, "state": matrix-or-null}, ...]}``;

and a measurement is ``{"object_dim", "ancilla_dim", "ancilla_state",
"unitary", "projectors"}``.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .errors import ValidationError
from .povm import Povm
from .states import (
    DensityMatrix,
    GramMatrix,
    Outcome,
    OutcomeEnsemble,
    ProbingMatrix,
    ProjectorSet,
    PureState,
)


def matrix_to_json(mat: np.ndarray) -> dict:
    arr = np.asarray(mat, dtype=complex)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    rows, cols = arr.shape
    flat = arr.reshape(-1)
    return {
        "rows": rows,
        "cols": cols,
        "data": [[float(z.real), float(z.imag)] for z in flat],
    }


def matrix_from_json(obj: Any, where: str = "matrix") -> np.ndarray:
    if not isinstance(obj, dict):
        raise ValidationError("json-matrix-object", detail=f"{where}: expected an object")
    for key in ("rows", "cols", "data"):
        if key not in obj:
            raise ValidationError("json-matrix-keys", detail=f"{where}: missing {key!r}")
    rows, cols = obj["rows"], obj["cols"]
    if not isinstance(rows, int) or not isinstance(cols, int) or rows < 1 or cols < 1:
        raise ValidationError("json-matrix-shape", detail=f"{where}: rows/cols must be positive integers")
    data = obj["data"]
    if not isinstance(data, list) or len(data) != rows * cols:
        raise ValidationError(
            "json-matrix-data-length",
            detail=f"{where}: expected {rows * cols} entries, got {len(data) if isinstance(data, list) else type(data).__name__}",
        )
    out = np.empty(rows * cols, dtype=complex)
    for idx, entry in enumerate(data):
        if not (isinstance(entry, list) and len(entry) == 2):
            raise ValidationError("json-matrix-entry", detail=f"{where}: entry {idx} is not [re, im]")
        re, im = entry
        out[idx] = complex(float(re), float(im))
    if not np.all(np.isfinite(out)):
        raise ValidationError("json-matrix-finite", detail=f"{where}: non-finite entry")
    return out.reshape(rows, cols)


def _tagged(kind: str, mat: np.ndarray) -> dict:
    return {"kind": kind, **matrix_to_json(mat)}


def density_to_json(value: DensityMatrix) -> dict:
    return _tagged("density", value.mat)


def pure_to_json(value: PureState) -> dict:
    return _tagged("pure", value.amp)


def gram_to_json(value: GramMatrix) -> dict:
    return _tagged("gram", value.mat)


def probing_to_json(value: ProbingMatrix) -> dict:
    return _tagged("probing", value.mat)


def projector_set_to_json(value: ProjectorSet) -> dict:
    return {"kind": "projector_set", "projectors": [matrix_to_json(p) for p in value]}


def ensemble_to_json(value: OutcomeEnsemble) -> dict:
    outcomes = []
    for outcome in value:
        state = None if outcome.state is None else matrix_to_json(outcome.state.mat)
        outcomes.append({"p": outcome.probability, "state": state})
    return {"kind": "ensemble", "outcomes": outcomes}


def _expect_kind(obj: Any, kind: str, where: str) -> None:
    if not isinstance(obj, dict) or obj.get("kind") != kind:
        found = obj.get("kind") if isinstance(obj, dict) else type(obj).__name__
        raise ValidationError("json-kind", detail=f"{where}: expected kind {kind!r}, found {found!r}")


def density_from_json(obj: Any, where: str = "density") -> DensityMatrix:
    _expect_kind(obj, "density", where)
    return DensityMatrix(matrix_from_json(obj, where))


def pure_from_json(obj: Any, where: str = "pure") -> PureState:
    _expect_kind(obj, "pure", where)
    return PureState(matrix_from_json(obj, where).reshape(-1))


def gram_from_json(obj: Any, where: str = "gram") -> GramMatrix:
    _expect_kind(obj, "gram", where)
    return GramMatrix(matrix_from_json(obj, where))


def probing_from_json(obj: Any, where: str = "probing") -> ProbingMatrix:
    _expect_kind(obj, "probing", where)
    return ProbingMatrix(matrix_from_json(obj, where))


def projector_set_from_json(obj: Any, where: str = "projector_set") -> ProjectorSet:
    _expect_kind(obj, "projector_set", where)
    mats = obj.get("projectors")
    if not isinstance(mats, list) or not mats:
        raise ValidationError("json-projectors", detail=f"{where}: 'projectors' must be a non-empty list")
    return ProjectorSet(tuple(matrix_from_json(m, f"{where}.projectors[{i}]") for i, m in enumerate(mats)))


def ensemble_from_json(obj: Any, where: str = "ensemble") -> OutcomeEnsemble:
    _expect_kind(obj, "ensemble", where)
    raw = obj.get("outcomes")
    if not isinstance(raw, list) or not raw:
        raise ValidationError("json-outcomes", detail=f"{where}: 'outcomes' must be a non-empty list")
    outcomes = []
    for idx, entry in enumerate(raw):
        if not isinstance(entry, dict) or "p" not in entry:
            raise ValidationError("json-outcome", detail=f"{where}: outcome {idx} needs a 'p' field")
        state_obj = entry.get("state")
        state = None if state_obj is None else DensityMatrix(matrix_from_json(state_obj, f"{where}.outcomes[{idx}].state"))
        outcomes.append(Outcome(float(entry["p"]), state))
    return OutcomeEnsemble(tuple(outcomes))


def povm_to_json(value: Povm) -> dict:
    return {
        "object_dim": value.object_dim,
        "ancilla_dim": value.ancilla_dim,
        "ancilla_state": matrix_to_json(value.ancilla_state.mat),
        "unitary": matrix_to_json(value.joint_unitary),
        "projectors": [matrix_to_json(p) for p in value.joint_projectors],
    }


def povm_from_json(obj: Any, where: str = "povm") -> Povm:
    if not isinstance(obj, dict):
        raise ValidationError("json-povm-object", detail=f"{where}: expected an object")
    for key in ("object_dim", "ancilla_dim", "ancilla_state", "unitary", "projectors"):
        if key not in obj:
            raise ValidationError("json-povm-keys", detail=f"{where}: missing {key!r}")
    projectors = obj["projectors"]
    if not isinstance(projectors, list) or not projectors:
        raise ValidationError("json-povm-projectors", detail=f"{where}: 'projectors' must be a non-empty list")
    return Povm(
        object_dim=int(obj["object_dim"]),
        ancilla_dim=int(obj["ancilla_dim"]),
        ancilla_state=DensityMatrix(matrix_from_json(obj["ancilla_state"], f"{where}.ancilla_state")),
        joint_unitary=matrix_from_json(obj["unitary"], f"{where}.unitary"),
        joint_projectors=ProjectorSet(
            tuple(matrix_from_json(m, f"{where}.projectors[{i}]") for i, m in enumerate(projectors))
        ),
    )


def load_povm(path: str) -> Povm:
    """Parse a measurement from a JSON file, with parse diagnostics."""
    with open(path, "r", encoding="utf-8") as handle:
        try:
            obj = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ValidationError(
                "json-parse", detail=f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
            ) from exc
    return povm_from_json(obj, where=path)
