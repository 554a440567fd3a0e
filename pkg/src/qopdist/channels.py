"""Quantum operations in operator-sum form.

An operation is a finite set of Kraus operators E_mu mapping a dim_in
space into a dim_out space.  The associated operator T = sum E_mu^† E_mu
obeys 0 <= T <= 1 and carries everything this package needs: occurrence
probabilities tr(T rho), the probability-difference distance between two
inputs, its extremal states, and the exact-cloning example.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import TOL_PROB, default_tol
from .errors import (
    DegenerateInputError,
    DimensionMismatchError,
    PurityError,
    ValidationError,
    ZeroProbabilityError,
)
from .linalg import as_complex_matrix, hermitian_part, projector_onto
from .metrics import fidelity, trace_distance
from .states import DensityMatrix, validate_state

__all__ = [
    "ClonerOutputs",
    "ContractivityReport",
    "ExtremalPair",
    "QuantumOperation",
    "apply",
    "cloner_distance_factor",
    "cloner_outputs",
    "contractivity_check",
    "e_distance",
    "is_trace_preserving",
    "max_e_distance_over_states",
    "normalize_output",
    "occurrence_probability",
    "random_operation",
    "t_operator",
]


class QuantumOperation:
    """Immutable Kraus set {E_mu}, each of shape (dim_out, dim_in).

    The sum T = sum E_mu^† E_mu is validated to satisfy 0 <= T <= 1
    (eigenvalues in [-tol, 1+tol]) and cached at construction.
    """

    __slots__ = ("kraus", "dim_in", "dim_out", "t_op")

    def __init__(self, kraus, tol: float | None = None):
        if tol is None:
            tol = default_tol()
        ops = tuple(as_complex_matrix(e) for e in kraus)
        if not ops:
            raise ValidationError("need at least one Kraus operator")
        d_out, d_in = ops[0].shape
        for e in ops[1:]:
            if e.shape != (d_out, d_in):
                raise DimensionMismatchError(
                    f"Kraus shapes disagree: {(d_out, d_in)} vs {e.shape}"
                )
        t = np.zeros((d_in, d_in), dtype=np.complex128)
        for e in ops:
            t += e.conj().T @ e
        t = hermitian_part(t)
        w = np.linalg.eigvalsh(t)
        if w[0] < -tol or w[-1] > 1.0 + tol:
            raise ValidationError(
                f"Kraus sum gives T eigenvalues in [{w[0]:.3e}, {w[-1]:.3e}], "
                "outside [0, 1]"
            )
        for e in ops:
            e.flags.writeable = False
        t.flags.writeable = False
        object.__setattr__(self, "kraus", ops)
        object.__setattr__(self, "dim_in", int(d_in))
        object.__setattr__(self, "dim_out", int(d_out))
        object.__setattr__(self, "t_op", t)

    def __setattr__(self, name, value):
        raise AttributeError("QuantumOperation is immutable")

    def __repr__(self):
        return (
            f"QuantumOperation(n_kraus={len(self.kraus)}, "
            f"dim_in={self.dim_in}, dim_out={self.dim_out})"
        )


def _input_matrix(E: QuantumOperation, rho) -> np.ndarray:
    m = rho.mat if isinstance(rho, DensityMatrix) else as_complex_matrix(rho)
    if m.shape != (E.dim_in, E.dim_in):
        raise DimensionMismatchError(
            f"operand shape {m.shape} does not match operation input dim {E.dim_in}"
        )
    return m


def apply(E: QuantumOperation, rho) -> np.ndarray:
    """Operator-sum action sum E_mu rho E_mu^†; subnormalized for non-TP E."""
    m = _input_matrix(E, rho)
    out = np.zeros((E.dim_out, E.dim_out), dtype=np.complex128)
    for e in E.kraus:
        out += e @ m @ e.conj().T
    return hermitian_part(out)


def t_operator(E: QuantumOperation) -> np.ndarray:
    """The positive operator T = sum E_mu^† E_mu on the input space."""
    return E.t_op


def occurrence_probability(E: QuantumOperation, rho) -> float:
    """Probability tr(T rho) that the operation occurs on input rho."""
    m = _input_matrix(E, rho)
    p = float(np.trace(E.t_op @ m).real)
    return min(max(p, 0.0), 1.0)


def normalize_output(E: QuantumOperation, rho, tol_prob: float = TOL_PROB):
    """Normalized output state and its occurrence probability.

    Raises ZeroProbabilityError when the branch does not occur
    (probability at or below tol_prob).
    """
    p = occurrence_probability(E, rho)
    if p <= tol_prob:
        raise ZeroProbabilityError(f"occurrence probability {p:.3e} <= {tol_prob:.3e}")
    out = apply(E, rho) / p
    return validate_state(out, default_tol()), p


def e_distance(E: QuantumOperation, rho, sigma) -> float:
    """Absolute difference of occurrence probabilities |tr(T rho) - tr(T sigma)|."""
    mr = _input_matrix(E, rho)
    ms = _input_matrix(E, sigma)
    return abs(float(np.trace(E.t_op @ (mr - ms)).real))


def is_trace_preserving(E: QuantumOperation, tol: float | None = None) -> bool:
    """True when T equals the identity within tol (entrywise max norm)."""
    if tol is None:
        tol = default_tol()
    return bool(np.max(np.abs(E.t_op - np.eye(E.dim_in))) <= tol)


@dataclass(frozen=True)
class ExtremalPair:
    """Largest probability difference over all input pairs and its attainers."""

    value: float
    rho_star: DensityMatrix
    sigma_star: DensityMatrix
    theta_max: float
    theta_min: float

    def __post_init__(self):
        if abs(self.value - (self.theta_max - self.theta_min)) > 1e-12:
            raise ValidationError(
                f"value {self.value!r} != theta_max - theta_min = "
                f"{self.theta_max - self.theta_min!r}"
            )


def max_e_distance_over_states(E: QuantumOperation, cluster_tol: float = 1e-10) -> ExtremalPair:
    """Maximize the probability difference over all pairs of input states.

    The maximum equals the spread of the T spectrum; it is attained by the
    normalized projectors onto the top and bottom eigenspaces (eigenvalues
    within cluster_tol of the extremes).
    """
    w, v = np.linalg.eigh(E.t_op)
    theta_min, theta_max = float(w[0]), float(w[-1])
    dim = E.dim_in
    top = v[:, w >= theta_max - cluster_tol]
    bot = v[:, w <= theta_min + cluster_tol]
    rho_star = validate_state(projector_onto(top, dim) / top.shape[1])
    sigma_star = validate_state(projector_onto(bot, dim) / bot.shape[1])
    return ExtremalPair(
        value=theta_max - theta_min,
        rho_star=rho_star,
        sigma_star=sigma_star,
        theta_max=theta_max,
        theta_min=theta_min,
    )


@dataclass(frozen=True)
class ContractivityReport:
    """Trace-preserving operations never increase trace distance."""

    d_in: float
    d_out: float
    holds: bool


def contractivity_check(E: QuantumOperation, rho, sigma, slack: float = 1e-9) -> ContractivityReport:
    """Check D(out) <= D(in) for a trace-preserving operation."""
    if not is_trace_preserving(E):
        raise ValidationError("contractivity_check needs a trace-preserving operation")
    d_in = trace_distance(_input_matrix(E, rho), _input_matrix(E, sigma))
    d_out = trace_distance(apply(E, rho), apply(E, sigma))
    return ContractivityReport(d_in=d_in, d_out=d_out, holds=d_out <= d_in + slack)


@dataclass(frozen=True)
class ClonerOutputs:
    """Subnormalized outputs of the exact cloner for a designated pure pair."""

    g1: np.ndarray
    g2: np.ndarray
    omega: float


def cloner_outputs(omega1, omega2, tol: float | None = None) -> ClonerOutputs:
    """Outputs (1+Omega)^{-1} w_j (x) w_j of the exact probabilistic cloner.

    Omega is the fidelity of the two designated pure inputs; the success
    probability of exact cloning is 1/(1+Omega), which shows up as the
    common trace of both outputs.
    """
    if tol is None:
        tol = default_tol()
    s1 = omega1 if isinstance(omega1, DensityMatrix) else validate_state(omega1)
    s2 = omega2 if isinstance(omega2, DensityMatrix) else validate_state(omega2)
    if s1.dim != s2.dim:
        raise DimensionMismatchError(f"input dims differ: {s1.dim} vs {s2.dim}")
    for name, s in (("omega1", s1), ("omega2", s2)):
        purity = float(np.trace(s.mat @ s.mat).real)
        if purity < 1.0 - tol:
            raise PurityError(f"{name} is mixed (tr rho^2 = {purity:.12f})")
    om = fidelity(s1, s2)
    if om >= 1.0 - 1e-12:
        raise DegenerateInputError("designated pure states coincide")
    scale = 1.0 / (1.0 + om)
    return ClonerOutputs(
        g1=scale * np.kron(s1.mat, s1.mat),
        g2=scale * np.kron(s2.mat, s2.mat),
        omega=om,
    )


def cloner_distance_factor(omega: float) -> float:
    """Output/input distance ratio sqrt(1+Omega^2)/(1+Omega) of the cloner.

    Strictly decreasing on [0, 1) and always above 1/sqrt(2).
    """
    if not (0.0 <= omega < 1.0):
        raise ValidationError(f"Omega must lie in [0, 1), got {omega!r}")
    return float(np.sqrt(1.0 + omega * omega) / (1.0 + omega))


def random_operation(dim_in: int, dim_out: int, n_kraus: int, rng: np.random.Generator) -> QuantumOperation:
    """Random operation: complex-normal Kraus draws rescaled so that T <= 1.

    The whole set is divided by sqrt(||T|| + eps), which keeps the top of
    the T spectrum strictly below 1 and covers the non-trace-preserving
    regime the extremal-pair machinery cares about.
    """
    draws = [
        (rng.standard_normal((dim_out, dim_in)) + 1j * rng.standard_normal((dim_out, dim_in)))
        / np.sqrt(2.0)
        for _ in range(n_kraus)
    ]
    t = np.zeros((dim_in, dim_in), dtype=np.complex128)
    for e in draws:
        t += e.conj().T @ e
    top = float(np.linalg.eigvalsh(hermitian_part(t))[-1])
    scale = 1.0 / np.sqrt(top + 1e-9)
    return QuantumOperation([scale * e for e in draws])
