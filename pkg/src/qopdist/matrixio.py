"""Matrices as JSON text documents.

A matrix document carries explicit dimensions and a row-major list of
[re, im] pairs, plus an optional kind tag ("state", "hermitian") that is
enforced on load.  A Kraus-set document wraps a list of operator matrices
together with the input and output dimensions.  Floats are written with
Python's shortest round-trip repr, so load(save(x)) reproduces x exactly.
"""

from __future__ import annotations

import json

import numpy as np

from .channels import QuantumOperation
from .errors import MatrixFileError, ValidationError
from .linalg import as_complex_matrix, as_hermitian
from .states import DensityMatrix, validate_state

__all__ = [
    "KIND_HERMITIAN",
    "KIND_KRAUS_SET",
    "KIND_STATE",
    "doc_to_matrix",
    "load_hermitian",
    "load_kraus_set",
    "load_matrix",
    "load_state",
    "matrix_to_doc",
    "save_kraus_set",
    "save_matrix",
    "save_state",
]

KIND_STATE = "state"
KIND_HERMITIAN = "hermitian"
KIND_KRAUS_SET = "kraus_set"


def matrix_to_doc(mat, kind: str | None = None) -> dict:
    m = as_complex_matrix(mat)
    doc = {
        "dim_rows": int(m.shape[0]),
        "dim_cols": int(m.shape[1]),
        "entries": [[float(z.real), float(z.imag)] for z in m.reshape(-1)],
    }
    if kind is not None:
        doc["kind"] = kind
    return doc


def doc_to_matrix(doc) -> np.ndarray:
    if not isinstance(doc, dict):
        raise MatrixFileError(f"matrix document must be an object, got {type(doc).__name__}")
    try:
        rows = int(doc["dim_rows"])
        cols = int(doc["dim_cols"])
        entries = doc["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MatrixFileError(f"malformed matrix document: {exc!r}") from exc
    if rows < 1 or cols < 1:
        raise MatrixFileError(f"bad dimensions {rows} x {cols}")
    if not isinstance(entries, list) or len(entries) != rows * cols:
        raise MatrixFileError(
            f"entry count {len(entries) if isinstance(entries, list) else '?'} "
            f"does not match {rows} x {cols}"
        )
    flat = np.empty(rows * cols, dtype=np.complex128)
    for i, pair in enumerate(entries):
        if not (isinstance(pair, list) and len(pair) == 2):
            raise MatrixFileError(f"entry {i} is not a [re, im] pair")
        re, im = pair
        if not (isinstance(re, (int, float)) and isinstance(im, (int, float))):
            raise MatrixFileError(f"entry {i} has non-numeric parts")
        flat[i] = complex(re, im)
    if not np.all(np.isfinite(flat.real)) or not np.all(np.isfinite(flat.imag)):
        raise MatrixFileError("entries contain non-finite values")
    return flat.reshape(rows, cols)


def _read_doc(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise MatrixFileError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MatrixFileError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise MatrixFileError(f"{path}: top-level value must be an object")
    return doc


def _write_doc(path, doc: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, sort_keys=True, indent=1)
        fh.write("\n")


def save_matrix(path, mat, kind: str | None = None) -> None:
    _write_doc(path, matrix_to_doc(mat, kind=kind))


def save_state(path, state) -> None:
    m = state.mat if isinstance(state, DensityMatrix) else state
    save_matrix(path, m, kind=KIND_STATE)


def load_matrix(path):
    """Load any plain matrix document; returns (matrix, kind-or-None)."""
    doc = _read_doc(path)
    kind = doc.get("kind")
    if kind == KIND_KRAUS_SET:
        raise MatrixFileError(f"{path}: kraus_set document where a single matrix was expected")
    if kind not in (None, KIND_STATE, KIND_HERMITIAN):
        raise MatrixFileError(f"{path}: unknown kind {kind!r}")
    return doc_to_matrix(doc), kind


def load_state(path) -> DensityMatrix:
    """Load a density matrix, enforcing the state validations."""
    mat, kind = load_matrix(path)
    if kind == KIND_HERMITIAN:
        raise MatrixFileError(f"{path}: kind 'hermitian' where a state was expected")
    try:
        return validate_state(mat)
    except ValidationError as exc:
        raise MatrixFileError(f"{path}: not a valid state: {exc}") from exc


def load_hermitian(path) -> np.ndarray:
    """Load a Hermitian matrix (kind 'hermitian', 'state', or untagged)."""
    mat, _ = load_matrix(path)
    try:
        return as_hermitian(mat)
    except ValidationError as exc:
        raise MatrixFileError(f"{path}: not Hermitian: {exc}") from exc


def save_kraus_set(path, op: QuantumOperation) -> None:
    doc = {
        "kind": KIND_KRAUS_SET,
        "dim_in": op.dim_in,
        "dim_out": op.dim_out,
        "operators": [matrix_to_doc(e) for e in op.kraus],
    }
    _write_doc(path, doc)


def load_kraus_set(path) -> QuantumOperation:
    doc = _read_doc(path)
    if doc.get("kind") != KIND_KRAUS_SET:
        raise MatrixFileError(f"{path}: expected kind 'kraus_set', got {doc.get('kind')!r}")
    try:
        dim_in = int(doc["dim_in"])
        dim_out = int(doc["dim_out"])
        operators = doc["operators"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MatrixFileError(f"{path}: malformed kraus_set: {exc!r}") from exc
    if not isinstance(operators, list) or not operators:
        raise MatrixFileError(f"{path}: kraus_set needs a nonempty operator list")
    mats = []
    for i, sub in enumerate(operators):
        m = doc_to_matrix(sub)
        if m.shape != (dim_out, dim_in):
            raise MatrixFileError(
                f"{path}: operator {i} has shape {m.shape}, expected ({dim_out}, {dim_in})"
            )
        mats.append(m)
    try:
        return QuantumOperation(mats)
    except ValidationError as exc:
        raise MatrixFileError(f"{path}: not a valid operation: {exc}") from exc
