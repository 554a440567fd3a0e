"""Dense complex linear algebra on small Hermitian matrices.

Everything downstream (distances, operation analysis, the maximizer
constructions) runs through the eigendecomposition, the positive square
root and the positive/negative spectral split implemented here.  Matrices
are plain complex128 ndarrays; validators return symmetrized copies so
later arithmetic never sees asymmetric round-off.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import TOL_HERM, TOL_ORTHO, TOL_PSD
from .errors import NumericalError, ValidationError

__all__ = [
    "SpectralSplit",
    "as_complex_matrix",
    "as_hermitian",
    "eig_hermitian",
    "hermitian_part",
    "projector_onto",
    "psd_sqrt",
    "random_hermitian",
    "spectral_split",
    "trace_norm_half",
]


def as_complex_matrix(a: np.ndarray) -> np.ndarray:
    """Coerce to a finite 2-D complex128 array."""
    m = np.ascontiguousarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ValidationError(f"expected a 2-D matrix, got ndim={m.ndim}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValidationError("matrix contains NaN or Inf entries")
    return m


def hermitian_part(a: np.ndarray) -> np.ndarray:
    """(A + A†)/2."""
    a = np.asarray(a, dtype=np.complex128)
    return 0.5 * (a + a.conj().T)


def as_hermitian(a: np.ndarray, tol: float = TOL_HERM) -> np.ndarray:
    """Validate Hermiticity within ``tol`` and return the symmetrized copy."""
    m = as_complex_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {m.shape}")
    dev = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    if dev > tol:
        raise ValidationError(f"matrix is not Hermitian: max |A - A†| = {dev:.3e} > {tol:.1e}")
    return hermitian_part(m)


def random_hermitian(dim: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    """GUE-style random Hermitian matrix with entries of typical size ``scale``."""
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return hermitian_part(scale * g / np.sqrt(2.0))


def eig_hermitian(h: np.ndarray, tol: float = TOL_HERM) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns ``(vals, vecs)`` with eigenvalues sorted descending and
    eigenvectors as the matching columns of ``vecs``.
    """
    m = as_hermitian(h, tol)
    try:
        w, v = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK rarely fails here
        raise NumericalError(f"eigendecomposition did not converge: {exc}") from exc
    return w[::-1].copy(), v[:, ::-1].copy()


def psd_sqrt(a: np.ndarray, tol_psd: float = TOL_PSD) -> np.ndarray:
    """Unique positive square root of a positive semidefinite matrix.

    Eigenvalues in ``[-tol_psd, 0)`` are treated as round-off and clamped
    to zero; anything more negative is rejected.
    """
    w, v = eig_hermitian(a)
    if w.size and w[-1] < -tol_psd:
        raise ValidationError(f"matrix is not PSD: min eigenvalue {w[-1]:.3e} < -{tol_psd:.1e}")
    w = np.clip(w, 0.0, None)
    return hermitian_part((v * np.sqrt(w)) @ v.conj().T)


@dataclass(frozen=True)
class SpectralSplit:
    """Positive/negative split of a Hermitian matrix.

    ``q_mat - r_mat`` reconstructs the input; both parts are PSD with
    orthogonal supports.  Basis arrays hold orthonormal columns: ``q_basis``
    spans the strictly-positive eigenspace (eigenvalues ``q_vals``,
    descending), ``r_basis`` the strictly-negative one (``r_vals`` are the
    magnitudes), and ``kernel_basis`` the numerical kernel.
    """

    q_mat: np.ndarray
    r_mat: np.ndarray
    q_vals: np.ndarray
    r_vals: np.ndarray
    q_basis: np.ndarray
    r_basis: np.ndarray
    kernel_basis: np.ndarray

    @property
    def dim(self) -> int:
        return self.q_mat.shape[0]

    @property
    def kernel_dim(self) -> int:
        return self.kernel_basis.shape[1]


def spectral_split(delta: np.ndarray, tol_zero: float | None = None) -> SpectralSplit:
    """Split a Hermitian matrix into positive part, negative part and kernel.

    Eigenvalues with magnitude below ``tol_zero`` are assigned to the
    kernel.  The default cut is relative: ``1e-9 * max|eigenvalue|``.
    """
    w, v = eig_hermitian(delta)
    top = float(np.max(np.abs(w))) if w.size else 0.0
    if tol_zero is None:
        tol_zero = 1e-9 * top
    pos = w > tol_zero
    neg = w < -tol_zero
    ker = ~(pos | neg)
    dim = v.shape[0]

    q_basis = v[:, pos]
    r_basis = v[:, neg][:, ::-1]  # most negative last in eigh order; flip to magnitude-descending
    q_vals = w[pos]
    r_vals = -w[neg][::-1]
    q_mat = hermitian_part((q_basis * q_vals) @ q_basis.conj().T) if q_vals.size else np.zeros((dim, dim), dtype=np.complex128)
    r_mat = hermitian_part((r_basis * r_vals) @ r_basis.conj().T) if r_vals.size else np.zeros((dim, dim), dtype=np.complex128)
    return SpectralSplit(
        q_mat=q_mat,
        r_mat=r_mat,
        q_vals=q_vals,
        r_vals=r_vals,
        q_basis=q_basis,
        r_basis=r_basis,
        kernel_basis=v[:, ker],
    )


def projector_onto(vectors, dim: int, tol: float = TOL_ORTHO) -> np.ndarray:
    """Orthogonal projector onto the span of the given orthonormal vectors.

    ``vectors`` may be a sequence of 1-D arrays or a 2-D array whose
    columns are the vectors.  An empty list yields the zero matrix.
    """
    cols = _as_columns(vectors, dim)
    if cols.shape[1]:
        gram = cols.conj().T @ cols
        dev = float(np.max(np.abs(gram - np.eye(cols.shape[1]))))
        if dev > tol:
            raise ValidationError(f"vectors are not orthonormal: Gram deviation {dev:.3e} > {tol:.1e}")
    return hermitian_part(cols @ cols.conj().T)


def _as_columns(vectors, dim: int) -> np.ndarray:
    if isinstance(vectors, np.ndarray) and vectors.ndim == 2:
        cols = np.ascontiguousarray(vectors, dtype=np.complex128)
    else:
        vecs = [np.asarray(x, dtype=np.complex128).reshape(-1) for x in vectors]
        if not vecs:
            return np.zeros((dim, 0), dtype=np.complex128)
        cols = np.stack(vecs, axis=1)
    if cols.shape[0] != dim:
        raise ValidationError(f"vectors live in dimension {cols.shape[0]}, expected {dim}")
    return cols


def trace_norm_half(delta: np.ndarray) -> float:
    """Half the trace norm of a Hermitian matrix: (1/2) sum of |eigenvalues|."""
    w, _ = eig_hermitian(delta)
    return 0.5 * float(np.sum(np.abs(w)))
