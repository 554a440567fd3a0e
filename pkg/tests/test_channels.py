"""Tests for Kraus-set operations, probabilities and the exact cloner."""

import numpy as np
import pytest

from qopdist.channels import (
    QuantumOperation,
    apply,
    cloner_distance_factor,
    cloner_outputs,
    contractivity_check,
    e_distance,
    is_trace_preserving,
    max_e_distance_over_states,
    normalize_output,
    occurrence_probability,
    random_operation,
    t_operator,
)
from qopdist.errors import (
    DegenerateInputError,
    DimensionMismatchError,
    PurityError,
    ValidationError,
    ZeroProbabilityError,
)
from qopdist.metrics import trace_distance
from qopdist.states import random_density

# measure-|0> branch: a single Kraus row |0><0| into a 1-dim output space
KEEP0 = QuantumOperation([np.array([[1.0, 0.0]], dtype=complex)])


def test_t_operator_projector():
    assert np.max(np.abs(t_operator(KEEP0) - np.diag([1.0, 0.0]))) < 1e-15


def test_operation_rejects_empty():
    with pytest.raises(ValidationError):
        QuantumOperation([])


def test_operation_rejects_mixed_shapes():
    with pytest.raises(DimensionMismatchError):
        QuantumOperation([np.eye(2), np.eye(3)])


def test_operation_rejects_supernormalized():
    with pytest.raises(ValidationError):
        QuantumOperation([np.sqrt(2.0) * np.eye(2)])


def test_operation_is_immutable():
    with pytest.raises(AttributeError):
        KEEP0.dim_in = 5


def test_apply_and_probability():
    rho = np.diag([0.3, 0.7]).astype(complex)
    out = apply(KEEP0, rho)
    assert out.shape == (1, 1)
    assert abs(out[0, 0] - 0.3) < 1e-15
    assert abs(occurrence_probability(KEEP0, rho) - 0.3) < 1e-15


def test_e_distance_frozen():
    rho = np.diag([0.3, 0.7]).astype(complex)
    sig = np.diag([0.8, 0.2]).astype(complex)
    assert abs(e_distance(KEEP0, rho, sig) - 0.5) < 1e-15


def test_normalize_output():
    rho = np.diag([0.5, 0.5]).astype(complex)
    state, p = normalize_output(KEEP0, rho)
    assert abs(p - 0.5) < 1e-15
    assert abs(state.mat[0, 0] - 1.0) < 1e-14


def test_normalize_output_zero_probability():
    with pytest.raises(ZeroProbabilityError):
        normalize_output(KEEP0, np.diag([0.0, 1.0]).astype(complex))


def test_trace_preserving_detection():
    q, _ = np.linalg.qr(
        np.random.default_rng(1).standard_normal((3, 3))
        + 1j * np.random.default_rng(2).standard_normal((3, 3))
    )
    assert is_trace_preserving(QuantumOperation([q]))
    assert not is_trace_preserving(KEEP0)


def test_max_e_distance_diagonal_t():
    """T = diag(0.9, 0.3): the spread is 0.6, attained on eigenprojectors."""
    op = QuantumOperation(
        [np.diag([np.sqrt(0.9), 0.0]).astype(complex), np.diag([0.0, np.sqrt(0.3)]).astype(complex)]
    )
    ext = max_e_distance_over_states(op)
    assert abs(ext.value - 0.6) < 1e-12
    assert abs(ext.theta_max - 0.9) < 1e-12
    assert abs(ext.theta_min - 0.3) < 1e-12
    assert abs(e_distance(op, ext.rho_star, ext.sigma_star) - 0.6) < 1e-12


def test_max_e_distance_trace_preserving_is_zero():
    eye = np.eye(3, dtype=complex)
    proj = QuantumOperation([np.outer(eye[:, k], eye[:, k]) for k in range(3)])
    assert max_e_distance_over_states(proj).value < 1e-12


def test_random_pairs_never_beat_extremal():
    rng = np.random.default_rng(31)
    op = random_operation(4, 3, 2, rng)
    ext = max_e_distance_over_states(op)
    for _ in range(200):
        rho = random_density(4, int(rng.integers(1, 5)), rng)
        sig = random_density(4, int(rng.integers(1, 5)), rng)
        assert e_distance(op, rho, sig) <= ext.value + 1e-9


def test_contractivity_requires_trace_preserving():
    rho = np.diag([1.0, 0.0]).astype(complex)
    sig = np.diag([0.5, 0.5]).astype(complex)
    with pytest.raises(ValidationError):
        contractivity_check(KEEP0, rho, sig)


def test_contractivity_holds_for_unitary():
    rng = np.random.default_rng(33)
    q, _ = np.linalg.qr(rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)))
    op = QuantumOperation([q])
    rho = random_density(3, 2, rng)
    sig = random_density(3, 3, rng)
    rep = contractivity_check(op, rho, sig)
    assert rep.holds
    assert abs(rep.d_out - rep.d_in) < 1e-10  # unitaries preserve distance


def test_random_operation_t_below_identity():
    rng = np.random.default_rng(34)
    for _ in range(20):
        op = random_operation(int(rng.integers(2, 6)), int(rng.integers(1, 5)), int(rng.integers(1, 4)), rng)
        w = np.linalg.eigvalsh(op.t_op)
        assert w[0] > -1e-12 and w[-1] <= 1.0 + 1e-9


def test_cloner_orthogonal_pair():
    e0 = np.diag([1.0, 0.0]).astype(complex)
    e1 = np.diag([0.0, 1.0]).astype(complex)
    out = cloner_outputs(e0, e1)
    assert abs(out.omega) < 1e-12
    assert np.max(np.abs(out.g1 - np.kron(e0, e0))) < 1e-12
    assert np.max(np.abs(out.g2 - np.kron(e1, e1))) < 1e-12
    ratio = trace_distance(out.g1, out.g2) / trace_distance(e0, e1)
    assert abs(ratio - 1.0) < 1e-12


def test_cloner_overlapping_pair():
    """cos-0.6 overlap: output/input ratio hits sqrt(1.36)/1.6."""
    v1 = np.array([1.0, 0.0], dtype=complex)
    v2 = np.array([0.6, 0.8], dtype=complex)
    out = cloner_outputs(np.outer(v1, v1.conj()), np.outer(v2, v2.conj()))
    assert abs(out.omega - 0.6) < 1e-12
    d_in = trace_distance(np.outer(v1, v1.conj()), np.outer(v2, v2.conj()))
    d_out = trace_distance(out.g1, out.g2)
    assert abs(d_out / d_in - 0.7288689868556625) < 1e-10
    # subnormalized outputs: trace is 1/(1+Omega)
    assert abs(float(np.trace(out.g1).real) - 1.0 / 1.6) < 1e-12


def test_cloner_rejects_mixed():
    mixed = np.diag([0.75, 0.25]).astype(complex)
    pure = np.diag([1.0, 0.0]).astype(complex)
    with pytest.raises(PurityError):
        cloner_outputs(mixed, pure)
    with pytest.raises(PurityError):
        cloner_outputs(pure, mixed)


def test_cloner_rejects_identical():
    pure = np.diag([1.0, 0.0]).astype(complex)
    with pytest.raises(DegenerateInputError):
        cloner_outputs(pure, pure)


def test_cloner_distance_factor():
    assert cloner_distance_factor(0.0) == 1.0
    assert abs(cloner_distance_factor(0.6) - 0.7288689868556625) < 1e-15
    assert cloner_distance_factor(0.99) > 1.0 / np.sqrt(2.0)
    with pytest.raises(ValidationError):
        cloner_distance_factor(1.0)
    with pytest.raises(ValidationError):
        cloner_distance_factor(-0.1)
