"""Distance measures on states and Hermitian operators.

Trace distance is defined for arbitrary Hermitian matrices (half the trace
norm of the difference); fidelity, angle and sine distance require states.
The qubit closed forms and the gap maximizer live here too.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .config import default_tol
from .errors import DimensionMismatchError, ValidationError
from .linalg import as_hermitian, hermitian_part, psd_sqrt
from .states import DensityMatrix, validate_state

__all__ = [
    "FvdgReport",
    "QubitGapPoint",
    "angle",
    "check_fvdg_bounds",
    "fidelity",
    "max_qubit_gap",
    "qubit_gap",
    "sine_distance",
    "trace_distance",
]


def _as_matrix(x) -> np.ndarray:
    return x.mat if isinstance(x, DensityMatrix) else as_hermitian(x)


def _as_state(x) -> DensityMatrix:
    return x if isinstance(x, DensityMatrix) else validate_state(x, default_tol())


def trace_distance(a, b) -> float:
    """Half the trace norm of (a - b) for Hermitian a, b."""
    ma, mb = _as_matrix(a), _as_matrix(b)
    if ma.shape != mb.shape:
        raise DimensionMismatchError(f"operands have shapes {ma.shape} and {mb.shape}")
    w = np.linalg.eigvalsh(ma - mb)
    return 0.5 * float(np.sum(np.abs(w)))


def fidelity(rho, sigma) -> float:
    """Uhlmann fidelity tr sqrt(sqrt(rho) sigma sqrt(rho)), clamped to [0, 1].

    Evaluated as the nuclear norm of sqrt(rho) @ sqrt(sigma): identical in
    exact arithmetic, but rank-deficient inputs keep full precision because
    eigenvalue noise enters the sum linearly instead of under a square root.
    """
    r, s = _as_state(rho), _as_state(sigma)
    if r.dim != s.dim:
        raise DimensionMismatchError(f"states have dims {r.dim} and {s.dim}")
    sv = np.linalg.svd(psd_sqrt(r.mat) @ psd_sqrt(s.mat), compute_uv=False)
    return float(np.clip(np.sum(sv), 0.0, 1.0))


def angle(rho, sigma) -> float:
    """Angle between states in [0, pi/2]: arccos of the fidelity."""
    return float(np.arccos(fidelity(rho, sigma)))


def sine_distance(rho, sigma) -> float:
    """sqrt(1 - F^2); coincides with the trace distance on pure pairs."""
    f = fidelity(rho, sigma)
    return float(np.sqrt(max(1.0 - f * f, 0.0)))


@dataclass(frozen=True)
class QubitGapPoint:
    """A point of the qubit parallelepiped with its gap value."""

    u: float
    v: float
    eta: float
    value: float

    def __post_init__(self):
        ref = qubit_gap(self.u, self.v, self.eta)
        if not np.isfinite(self.value) or abs(self.value - ref) > 1e-12:
            raise ValidationError(f"value {self.value!r} inconsistent with gap({self.u}, {self.v}, {self.eta}) = {ref!r}")


def qubit_gap(u: float, v: float, eta: float) -> float:
    """Sine distance minus trace distance for qubits with Bloch lengths
    u, v and angle cosine eta."""
    if not (-1e-12 <= u <= 1 + 1e-12 and -1e-12 <= v <= 1 + 1e-12 and -1 - 1e-12 <= eta <= 1 + 1e-12):
        raise ValidationError(f"(u, v, eta) = ({u}, {v}, {eta}) outside [0,1]x[0,1]x[-1,1]")
    val = _kernels.gap_values(
        np.array([min(max(u, 0.0), 1.0)]),
        np.array([min(max(v, 0.0), 1.0)]),
        np.array([min(max(eta, -1.0), 1.0)]),
    )
    return float(val[0])


def max_qubit_gap(coarse_n: int = 50, refine_rounds: int = 6) -> QubitGapPoint:
    """Maximize the qubit gap over the parallelepiped [0,1]^2 x [-1,1].

    Deterministic coarse grid followed by shrinking-box refinement around
    the incumbent; ties resolve to the lexicographically smallest point.
    Derivative-free on purpose: the surface has square-root cusps.
    """
    if coarse_n < 20:
        raise ValidationError(f"coarse_n must be >= 20, got {coarse_n}")
    box = [(0.0, 1.0), (0.0, 1.0), (-1.0, 1.0)]
    full = [(0.0, 1.0), (0.0, 1.0), (-1.0, 1.0)]
    best_val = -np.inf
    best_pt = (0.0, 0.0, -1.0)
    for _ in range(refine_rounds + 1):
        axes = [np.linspace(lo, hi, coarse_n) for lo, hi in box]
        val, bu, bv, be = _kernels.gap_grid_max(*axes)
        if val > best_val:
            best_val = val
            best_pt = (bu, bv, be)
        # Shrink to a few grid cells around the incumbent, clipped to the box.
        box = []
        for (lo, hi), c, (flo, fhi) in zip(
            [(axes[0][0], axes[0][-1]), (axes[1][0], axes[1][-1]), (axes[2][0], axes[2][-1])],
            best_pt,
            full,
        ):
            half = 2.0 * (hi - lo) / (coarse_n - 1)
            box.append((max(c - half, flo), min(c + half, fhi)))
    u, v, eta = best_pt
    return QubitGapPoint(u=u, v=v, eta=eta, value=best_val)


@dataclass(frozen=True)
class FvdgReport:
    """Fuchs-van de Graaf check: 1 - F <= D <= sqrt(1 - F^2)."""

    trace_dist: float
    fid: float
    sine_dist: float
    lower_ok: bool
    upper_ok: bool


def check_fvdg_bounds(rho, sigma, slack: float = 1e-9) -> FvdgReport:
    """Evaluate both fidelity/trace-distance bounds on a state pair."""
    d = trace_distance(_as_state(rho), _as_state(sigma))
    f = fidelity(rho, sigma)
    c = sine_distance(rho, sigma)
    return FvdgReport(
        trace_dist=d,
        fid=f,
        sine_dist=c,
        lower_ok=(1.0 - f) <= d + slack,
        upper_ok=d <= c + slack,
    )
