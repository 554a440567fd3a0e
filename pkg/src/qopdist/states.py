"""Density matrices, qubit constructors and random-state sampling.

Random states are drawn from the Hilbert-Schmidt-induced measure (Ginibre
construction); all samplers take an explicit ``numpy.random.Generator`` so
every suite is reproducible from its seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import TOL_PSD, TOL_TRACE, default_tol
from .errors import ValidationError
from .linalg import as_hermitian, hermitian_part

__all__ = [
    "DensityMatrix",
    "PAULI",
    "bloch_of",
    "from_bloch",
    "random_density",
    "random_pure",
    "validate_state",
]

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)


@dataclass(frozen=True)
class DensityMatrix:
    """A normalized quantum state: Hermitian, PSD, unit trace.

    Construction validates the invariants, so holding a ``DensityMatrix``
    is the proof that the wrapped matrix is a state.
    """

    mat: np.ndarray

    def __post_init__(self):
        m = as_hermitian(self.mat)
        w = np.linalg.eigvalsh(m)
        if w[0] < -TOL_PSD:
            raise ValidationError(f"state is not PSD: min eigenvalue {w[0]:.3e}")
        tr = float(np.trace(m).real)
        if abs(tr - 1.0) > TOL_TRACE:
            raise ValidationError(f"state trace {tr!r} deviates from 1 beyond {TOL_TRACE:.1e}")
        m.flags.writeable = False
        object.__setattr__(self, "mat", m)

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    @property
    def purity(self) -> float:
        return float(np.trace(self.mat @ self.mat).real)


def from_bloch(u) -> DensityMatrix:
    """Qubit state (1/2)(I + u . sigma) from a Bloch vector of length <= 1."""
    u = np.asarray(u, dtype=np.float64).reshape(-1)
    if u.shape != (3,):
        raise ValidationError(f"Bloch vector must have 3 components, got {u.shape}")
    norm = float(np.linalg.norm(u))
    if norm > 1.0 + 1e-12:
        raise ValidationError(f"Bloch vector length {norm!r} exceeds 1")
    m = 0.5 * (np.eye(2, dtype=np.complex128) + u[0] * PAULI[0] + u[1] * PAULI[1] + u[2] * PAULI[2])
    return DensityMatrix(m)


def bloch_of(rho: DensityMatrix) -> np.ndarray:
    """Recover the Bloch vector u_i = tr(rho sigma_i) of a qubit state."""
    m = rho.mat
    if m.shape != (2, 2):
        raise ValidationError("Bloch coordinates are defined for qubits only")
    return np.array([float(np.trace(m @ s).real) for s in PAULI])


def random_pure(dim: int, rng: np.random.Generator) -> DensityMatrix:
    """Rank-1 projector onto a Haar-uniform random ket."""
    if dim < 1:
        raise ValidationError("dimension must be >= 1")
    psi = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    psi /= np.linalg.norm(psi)
    return DensityMatrix(np.outer(psi, psi.conj()))


def random_density(dim: int, rank: int, rng: np.random.Generator) -> DensityMatrix:
    """Random state of the given rank, Hilbert-Schmidt-induced measure.

    Draws a ``rank x dim`` Ginibre matrix G and returns G†G / tr(G†G).
    """
    if not 1 <= rank <= dim:
        raise ValidationError(f"rank must satisfy 1 <= rank <= dim, got rank={rank}, dim={dim}")
    g = rng.standard_normal((rank, dim)) + 1j * rng.standard_normal((rank, dim))
    m = g.conj().T @ g
    m = hermitian_part(m / np.trace(m).real)
    return DensityMatrix(m)


def validate_state(m: np.ndarray, tol: float | None = None) -> DensityMatrix:
    """Check PSD and unit trace within ``tol``; normalize drift below it.

    Raises ``ValidationError`` naming the offending quantity otherwise.
    """
    if tol is None:
        tol = default_tol()
    h = as_hermitian(m, tol)
    w = np.linalg.eigvalsh(h)
    if w[0] < -tol:
        raise ValidationError(f"negative eigenvalue {w[0]:.6e} beyond tolerance {tol:.1e}")
    tr = float(np.trace(h).real)
    if abs(tr - 1.0) > tol:
        raise ValidationError(f"trace {tr!r} deviates from 1 beyond tolerance {tol:.1e}")
    h = h / tr
    # Re-clamp tiny negative round-off so the constructor's stricter cut passes.
    if np.linalg.eigvalsh(h)[0] < -TOL_PSD:
        vals, vecs = np.linalg.eigh(h)
        vals = np.clip(vals, 0.0, None)
        h = hermitian_part((vecs * vals) @ vecs.conj().T)
        h /= np.trace(h).real
    return DensityMatrix(h)
