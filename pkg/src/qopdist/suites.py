"""Seeded verification suites and their report plumbing.

Each suite re-checks one cluster of claims at Monte Carlo scale and
returns a SuiteReport: attainment residuals for the constructions,
violation counts for the inequalities, and distribution-level checks for
the triangle statistics.  Reports serialize as line-delimited JSON with a
schema header; timing stays in memory only, so a fixed seed reproduces a
report file byte for byte.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

import numpy as np

from . import statlab
from .channels import (
    QuantumOperation,
    apply,
    cloner_distance_factor,
    cloner_outputs,
    e_distance,
    max_e_distance_over_states,
    random_operation,
)
from .errors import ReportParseError, ValidationError
from .linalg import random_hermitian
from .maximizers import (
    MaximizerMode,
    build_maximizing_operation,
    extremal_trace_product,
    maximizing_projector,
)
from .metrics import fidelity, max_qubit_gap, sine_distance, trace_distance
from .states import random_density, random_pure
from .statlab import BoundKind, dominance_implies_moments, empirical_cdf, moment_check

__all__ = [
    "SUITE_NAMES",
    "SuiteReport",
    "parse_report",
    "run_all",
    "run_suite",
    "write_report",
]

REPORT_FORMAT = "qopdist-suite-report"
SCHEMA_VERSION = 1

SUITE_NAMES = (
    "thm1",
    "thm2",
    "thm3",
    "thm4",
    "thm5",
    "cloning",
    "lemma1",
    "lemma2",
    "appendixB",
    "section3",
)

SQRT2 = float(np.sqrt(2.0))


@dataclass(frozen=True)
class SuiteReport:
    """Result of one suite run; failures count failed detail checks."""

    suite_name: str
    n_cases: int
    n_failures: int
    worst_residual: float
    seed: int
    elapsed_seconds: float
    details: tuple

    def __post_init__(self):
        if self.n_failures > self.n_cases:
            raise ValidationError(
                f"n_failures {self.n_failures} exceeds n_cases {self.n_cases}"
            )
        if not np.isfinite(self.worst_residual):
            raise ValidationError(f"worst_residual {self.worst_residual!r} is not finite")


def _report(name: str, seed: int, n_cases: int, details: list, t0: float) -> SuiteReport:
    return SuiteReport(
        suite_name=name,
        n_cases=n_cases,
        n_failures=sum(1 for d in details if not d["ok"]),
        worst_residual=float(max(d["residual"] for d in details)),
        seed=seed,
        elapsed_seconds=time.perf_counter() - t0,
        details=tuple(details),
    )


def _rng(seed: int, salt: int) -> np.random.Generator:
    return np.random.default_rng([seed, salt])


def _distinct_pair(dim: int, rng: np.random.Generator, min_dist: float = 1e-3):
    while True:
        rho = random_density(dim, int(rng.integers(1, dim + 1)), rng)
        sig = random_density(dim, int(rng.integers(1, dim + 1)), rng)
        if trace_distance(rho, sig) >= min_dist:
            return rho, sig


def _ginibre_batch(dim: int, rank: int, count: int, rng: np.random.Generator) -> np.ndarray:
    g = rng.standard_normal((count, dim, rank)) + 1j * rng.standard_normal((count, dim, rank))
    mats = g @ g.conj().transpose(0, 2, 1)
    tr = np.trace(mats, axis1=1, axis2=2).real
    return mats / tr[:, None, None]


def _maximizer_shaped_op(dim: int, n_unit: int, dim_out: int) -> QuantumOperation:
    """Operation with T = diag(1,...,1,0,...,0): n_unit unit eigenvalues,
    the rest kernel; output vectors cycle through the output basis."""
    eye_in = np.eye(dim, dtype=np.complex128)
    eye_out = np.eye(dim_out, dtype=np.complex128)
    kraus = [np.outer(eye_out[:, i % dim_out], eye_in[:, i]) for i in range(n_unit)]
    return QuantumOperation(kraus)


# -- individual suites ---------------------------------------------------------


def run_thm1(seed: int, n_cases: int | None = None, slack: float = 1e-9) -> SuiteReport:
    """Constructed operations attain the trace distance as a probability
    gap, and no random operation beats it."""
    t0 = time.perf_counter()
    if n_cases is None:
        n_cases = 200
    n_oracle = 500
    rng = _rng(seed, 101)
    details = []
    for i in range(n_cases):
        dim = int(rng.integers(2, 7))
        rho, sig = _distinct_pair(dim, rng)
        d = trace_distance(rho, sig)
        mode = MaximizerMode.ON_Q if i % 2 == 0 else MaximizerMode.ON_R
        dim_out = int(rng.integers(1, 5))
        op = build_maximizing_operation(rho, sig, dim_out, mode)
        attain = abs(e_distance(op, rho, sig) - d)
        excess = -np.inf
        for _ in range(n_oracle):
            other = random_operation(dim, int(rng.integers(1, dim + 1)), int(rng.integers(1, 5)), rng)
            excess = max(excess, e_distance(other, rho, sig) - d)
        ok = attain < 1e-10 and excess <= slack
        details.append(
            {
                "case": f"pair-{i:03d}-dim{dim}-{mode.value}",
                "attain_residual": float(attain),
                "oracle_excess": float(excess),
                "residual": float(max(attain, excess)),
                "ok": bool(ok),
            }
        )
    return _report("thm1", seed, n_cases, details, t0)


def run_thm2(seed: int, n_cases: int | None = None, slack: float = 1e-9) -> SuiteReport:
    """Extremal input pairs attain the spread of the T spectrum; random
    pairs never exceed it; trace-preserving operations give zero."""
    t0 = time.perf_counter()
    if n_cases is None:
        n_cases = 100
    n_pairs = 2000
    rng = _rng(seed, 102)
    details = []
    for i in range(n_cases):
        dim = int(rng.integers(2, 7))
        op = random_operation(dim, int(rng.integers(1, dim + 1)), int(rng.integers(1, 5)), rng)
        ext = max_e_distance_over_states(op)
        attain = abs(e_distance(op, ext.rho_star, ext.sigma_star) - ext.value)
        t = op.t_op
        ranks = rng.integers(1, dim + 1, size=n_pairs)
        excess = -np.inf
        for rank in range(1, dim + 1):
            count = int(np.sum(ranks == rank))
            if count == 0:
                continue
            rhos = _ginibre_batch(dim, rank, count, rng)
            sigs = _ginibre_batch(dim, rank, count, rng)
            vals = np.abs(np.einsum("ij,nji->n", t, rhos - sigs).real)
            excess = max(excess, float(vals.max() - ext.value))
        ok = attain < 1e-10 and excess <= slack
        details.append(
            {
                "case": f"op-{i:03d}-dim{dim}",
                "attain_residual": float(attain),
                "pair_excess": float(excess),
                "residual": float(max(attain, excess)),
                "ok": bool(ok),
            }
        )
    # Trace-preserving operations: unitary singleton and a complete
    # projective measurement both have flat T spectrum.
    q, _ = np.linalg.qr(rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))
    eye = np.eye(3, dtype=np.complex128)
    for label, op in (
        ("tp-unitary", QuantumOperation([q])),
        ("tp-projective", QuantumOperation([np.outer(eye[:, k], eye[:, k]) for k in range(3)])),
    ):
        value = max_e_distance_over_states(op).value
        details.append(
            {"case": label, "residual": float(value), "ok": bool(value < 1e-10)}
        )
    return _report("thm2", seed, n_cases + 2, details, t0)


def _trial_suite(
    name: str,
    salt: int,
    seed: int,
    n_trials: int,
    check_fns,
    extra_details=None,
) -> SuiteReport:
    """Shared harness: run trials on two maximizer-shaped operations and
    apply per-distribution checks."""
    t0 = time.perf_counter()
    rng = _rng(seed, salt)
    ops = [
        _maximizer_shaped_op(5, 2, 2),
        _maximizer_shaped_op(2, 1, 1),
    ]
    shares = [max(n_trials - n_trials // 10, 1), max(n_trials // 10, 1)]
    details = []
    for op, share, tag in zip(ops, shares, ("dim5", "dim2")):
        records = statlab.run_trials(op, share, rng)
        for fn in check_fns:
            details.extend(fn(records, tag))
    if extra_details:
        details.extend(extra_details())
    return _report(name, seed, sum(shares), details, t0)


def _check_normalized_bounds(records, tag):
    gaps = np.array([r.d_out_normalized - r.d_in / r.point.p_m for r in records])
    bad = int(np.sum(gaps > 1e-9))
    out = [
        {
            "case": f"{tag}-normalized-ratio-bound",
            "violations": bad,
            "residual": float(gaps.max()),
            "ok": bad == 0,
        }
    ]
    rels = [
        (r.relative_increase, 1.0 - r.point.p_m)
        for r in records
        if r.relative_increase is not None
    ]
    if rels:
        over = np.array([a - b for a, b in rels])
        bad = int(np.sum(over > 1e-9))
        out.append(
            {
                "case": f"{tag}-relative-increase-bound",
                "violations": bad,
                "n_increasing": len(rels),
                "residual": float(over.max()),
                "ok": bad == 0,
            }
        )
    return out


def _check_half_bound(records, tag):
    gaps = np.array([r.d_out_subnormalized - 0.5 * r.d_in for r in records])
    bad = int(np.sum(gaps > 1e-9))
    return [
        {
            "case": f"{tag}-subnormalized-half-bound",
            "violations": bad,
            "residual": float(gaps.max()),
            "ok": bad == 0,
        }
    ]


def run_thm3(seed: int, n_cases: int | None = None, slack: float = 1e-9) -> SuiteReport:
    """Normalized output distance never beats the input distance divided by
    the larger probability; relative increase never beats 1 - p_m."""
    if n_cases is None:
        n_cases = 10_000
    return _trial_suite("thm3", 103, seed, n_cases, [_check_normalized_bounds])


def run_thm4(seed: int, n_cases: int | None = None, slack: float = 1e-9) -> SuiteReport:
    """Subnormalized output distance stays at or below half the input
    distance, with the orthogonal-qubit instance saturating it."""
    if n_cases is None:
        n_cases = 10_000

    def saturation():
        rho = np.diag([1.0, 0.0]).astype(np.complex128)
        sig = np.diag([0.0, 1.0]).astype(np.complex128)
        op = build_maximizing_operation(rho, sig, 1, MaximizerMode.ON_Q)
        d_sub = trace_distance(apply(op, rho), apply(op, sig))
        resid = abs(d_sub - 0.5)
        return [
            {"case": "orthogonal-qubit-saturation", "residual": float(resid), "ok": bool(resid < 1e-10)}
        ]

    return _trial_suite("thm4", 104, seed, n_cases, [_check_half_bound], extra_details=saturation)


def run_section3(seed: int, n_cases: int | None = None, slack: float = 1e-9) -> SuiteReport:
    """Distribution-level statistics over the uniform triangle."""
    t0 = time.perf_counter()
    if n_cases is None:
        n_cases = 100_000
    if n_cases < 100:
        raise ValidationError("section3 needs at least 100 trials")
    rng = _rng(seed, 105)
    op = _maximizer_shaped_op(5, 2, 2)
    records = statlab.run_trials(op, n_cases, rng)
    n = len(records)
    d_in = np.array([r.d_in for r in records])
    d_norm = np.array([r.d_out_normalized for r in records])
    rel = np.array(
        [r.relative_increase if r.relative_increase is not None else 0.0 for r in records]
    )
    details = []
    resid = abs(d_in.mean() - 1.0 / 3.0)
    details.append(
        {"case": "mean-input-distance", "value": float(d_in.mean()), "residual": float(resid), "ok": bool(resid <= 0.01)}
    )
    grid = np.round(np.arange(0.1, 0.95, 0.1), 2)
    cdf_norm = empirical_cdf(d_norm, grid)
    for xi, p in zip(grid, cdf_norm):
        sem = float(np.sqrt(max(p * (1.0 - p), 1e-12) / n))
        deficit = float(xi - p)
        details.append(
            {
                "case": f"output-cdf-at-{xi:.1f}",
                "empirical": float(p),
                "residual": deficit,
                "ok": bool(p >= xi - 3.0 * sem),
            }
        )
    mc = moment_check(d_norm, 1, BoundKind.UNIFORM)
    details.append(
        {
            "case": "output-mean-below-half",
            "empirical": mc.empirical_moment,
            "residual": float(mc.empirical_moment - mc.bound),
            "ok": mc.holds,
        }
    )
    cdf_rel = empirical_cdf(rel, grid)
    for ze, p in zip(grid, cdf_rel):
        target = 2.0 * ze - ze * ze
        sem = float(np.sqrt(max(p * (1.0 - p), 1e-12) / n))
        deficit = float(target - p)
        details.append(
            {
                "case": f"relative-increase-cdf-at-{ze:.1f}",
                "empirical": float(p),
                "residual": deficit,
                "ok": bool(p >= target - 3.0 * sem),
            }
        )
    wc = moment_check(rel, 1, BoundKind.WEDGE)
    details.append(
        {
            "case": "relative-increase-mean-below-third",
            "empirical": wc.empirical_moment,
            "residual": float(wc.empirical_moment - wc.bound),
            "ok": wc.holds,
        }
    )
    mb = statlab.mean_output_distance_bound(records)
    details.append(
        {
            "case": "mean-subnormalized-output-below-sixth",
            "empirical": mb.mean_d_out_sub,
            "residual": float(mb.mean_d_out_sub - 1.0 / 6.0),
            "ok": mb.holds,
        }
    )
    return _report("section3", seed, n_cases, details, t0)


def run_thm5(seed: int, n_cases: int | None = None, slack: float = 1e-9) -> SuiteReport:
    """Qubit gap maximum, its witness pair, and the global gap ceiling."""
    t0 = time.perf_counter()
    if n_cases is None:
        n_cases = 10_000
    rng = _rng(seed, 106)
    details = []
    point = max_qubit_gap()
    resid = abs(point.value - 0.25)
    details.append(
        {
            "case": "qubit-grid-max",
            "value": point.value,
            "at": [point.u, point.v, point.eta],
            "residual": float(resid),
            "ok": bool(resid <= 1e-4),
        }
    )
    rho = np.diag([1.0, 0.0]).astype(np.complex128)
    sig = np.diag([0.75, 0.25]).astype(np.complex128)
    gap = sine_distance(rho, sig) - trace_distance(rho, sig)
    resid = abs(gap - 0.25)
    details.append(
        {"case": "witness-pair-gap", "value": float(gap), "residual": float(resid), "ok": bool(resid < 1e-10)}
    )
    worst_gap = -np.inf
    worst_chain = -np.inf
    worst_angle = -np.inf
    bad = 0
    for _ in range(n_cases):
        dim = int(rng.integers(2, 7))
        rho_i, sig_i = _distinct_pair(dim, rng, min_dist=0.0)
        d = trace_distance(rho_i, sig_i)
        f = fidelity(rho_i, sig_i)
        c = float(np.sqrt(max(1.0 - f * f, 0.0)))
        gap_i = c - d
        chain = gap_i - (c + f - 1.0)
        angle_excess = (c + f) - SQRT2
        worst_gap = max(worst_gap, gap_i - (SQRT2 - 1.0))
        worst_chain = max(worst_chain, chain)
        worst_angle = max(worst_angle, angle_excess)
        if gap_i > SQRT2 - 1.0 + slack or chain > slack or angle_excess > 1e-12:
            bad += 1
    details.append(
        {
            "case": "global-gap-ceiling",
            "violations": bad,
            "worst_over_ceiling": float(worst_gap),
            "worst_chain_excess": float(worst_chain),
            "worst_angle_excess": float(worst_angle),
            "residual": float(max(worst_gap, worst_chain, worst_angle)),
            "ok": bad == 0,
        }
    )
    return _report("thm5", seed, n_cases + 2, details, t0)


def run_cloning(seed: int, n_cases: int | None = None, slack: float = 1e-9) -> SuiteReport:
    """Output/input distance ratio of the exact cloner matches its closed
    form and stays above 1/sqrt(2)."""
    t0 = time.perf_counter()
    if n_cases is None:
        n_cases = 200
    rng = _rng(seed, 107)
    details = []
    omega1 = np.diag([1.0, 0.0]).astype(np.complex128)
    omega2 = np.diag([0.0, 1.0]).astype(np.complex128)
    out = cloner_outputs(omega1, omega2)
    ratio = trace_distance(out.g1, out.g2) / trace_distance(omega1, omega2)
    resid = abs(ratio - 1.0)
    details.append(
        {"case": "orthogonal-pair-ratio-one", "ratio": float(ratio), "residual": float(resid), "ok": bool(resid < 1e-12)}
    )
    for i in range(n_cases):
        dim = int(rng.integers(2, 7))
        while True:
            w1 = random_pure(dim, rng)
            w2 = random_pure(dim, rng)
            if fidelity(w1, w2) < 1.0 - 1e-6:
                break
        out = cloner_outputs(w1, w2)
        d_in = trace_distance(w1, w2)
        d_out = trace_distance(out.g1, out.g2)
        ratio = d_out / d_in
        predicted = cloner_distance_factor(out.omega)
        resid = abs(ratio - predicted)
        ok = resid < slack and ratio > 1.0 / SQRT2
        details.append(
            {
                "case": f"pair-{i:03d}-dim{dim}",
                "omega": float(out.omega),
                "ratio": float(ratio),
                "residual": float(resid),
                "ok": bool(ok),
            }
        )
    return _report("cloning", seed, n_cases + 1, details, t0)


def run_lemma1(seed: int, n_cases: int | None = None, slack: float = 1e-9) -> SuiteReport:
    """Trace products tr(TQ) stay inside [theta*D, Theta*D] and the scaled
    eigenprojectors attain the endpoints."""
    t0 = time.perf_counter()
    if n_cases is None:
        n_cases = 500
    rng = _rng(seed, 108)
    details = []
    for i in range(n_cases):
        dim = int(rng.integers(2, 7))
        g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        t = g @ g.conj().T / dim
        d_frak = float(rng.uniform(0.05, 1.0))
        ext = extremal_trace_product(t, d_frak)
        attain = max(
            abs(float(np.trace(t @ ext.q_max).real) - ext.max_val),
            abs(float(np.trace(t @ ext.q_min).real) - ext.min_val),
        )
        rank = int(rng.integers(1, dim + 1))
        gq = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
        q = gq @ gq.conj().T
        q *= d_frak / float(np.trace(q).real)
        val = float(np.trace(t @ q).real)
        escape = max(ext.min_val - val, val - ext.max_val)
        ok = attain < 1e-10 and escape <= slack
        details.append(
            {
                "case": f"T-{i:03d}-dim{dim}",
                "attain_residual": float(attain),
                "escape": float(escape),
                "residual": float(max(attain, escape)),
                "ok": bool(ok),
            }
        )
    return _report("lemma1", seed, n_cases, details, t0)


def run_lemma2(seed: int, n_cases: int | None = None, slack: float = 1e-9) -> SuiteReport:
    """Moment identities of the flat and wedge densities via CDF
    integration, the dominance-to-moments implication, and the sine-plus-
    cosine ceiling on a dense angle grid."""
    t0 = time.perf_counter()
    if n_cases is None:
        n_cases = 10_000
    grid = np.linspace(0.0, 1.0, max(n_cases, 1000) + 1)
    cdf_uniform = grid.copy()
    cdf_wedge = 2.0 * grid - grid * grid
    details = []
    for n in range(1, 6):
        m_u = statlab._cdf_moment(grid, cdf_uniform, n)
        m_w = statlab._cdf_moment(grid, cdf_wedge, n)
        for label, m, target in (
            (f"uniform-moment-{n}", m_u, 1.0 / (n + 1)),
            (f"wedge-moment-{n}", m_w, 2.0 / (n * n + 3 * n + 2)),
        ):
            resid = abs(m - target)
            details.append(
                {"case": label, "value": float(m), "residual": float(resid), "ok": bool(resid <= 1e-3)}
            )
    dom = dominance_implies_moments((grid, cdf_wedge), (grid, cdf_uniform), range(1, 6))
    details.append(
        {
            "case": "wedge-dominates-uniform",
            "dominance": dom.dominance_holds,
            "residual": float(max(a - b for a, b in zip(dom.moments_g, dom.moments_h))),
            "ok": bool(dom),
        }
    )
    same = dominance_implies_moments((grid, cdf_uniform), (grid, cdf_uniform), range(1, 6))
    resid = float(max(abs(a - b) for a, b in zip(same.moments_g, same.moments_h)))
    details.append({"case": "equal-cdfs-equal-moments", "residual": resid, "ok": bool(same)})
    alpha = np.linspace(0.0, 2.0 * np.pi, max(n_cases, 1000))
    excess = float(np.max(np.sin(alpha) + np.cos(alpha)) - SQRT2)
    details.append(
        {"case": "sin-plus-cos-ceiling", "residual": excess, "ok": bool(excess <= 1e-12)}
    )
    return _report("lemma2", seed, max(n_cases, len(details)), details, t0)


def run_appendixB(seed: int, n_cases: int | None = None, slack: float = 1e-9) -> SuiteReport:
    """Hermitian-operator metric axioms, maximizing-projector optimality,
    and joint convexity on random instances."""
    t0 = time.perf_counter()
    if n_cases is None:
        n_cases = 500
    n_probes = 200
    rng = _rng(seed, 109)
    details = []
    for i in range(n_cases):
        dim = int(rng.integers(2, 7))
        a = random_hermitian(dim, rng)
        b = random_hermitian(dim, rng)
        c = random_hermitian(dim, rng)
        d_ab = trace_distance(a, b)
        sym = abs(d_ab - trace_distance(b, a))
        self_zero = trace_distance(a, a)
        tri = d_ab - (trace_distance(a, c) + trace_distance(c, b))
        mp = maximizing_projector(a, b)
        ident = abs(mp.value - (d_ab + 0.5 * float(np.trace(a - b).real)))
        probe_excess = -np.inf
        delta = a - b
        for _ in range(n_probes):
            rank = int(rng.integers(0, dim + 1))
            if rank == 0:
                probe = np.zeros((dim, dim), dtype=np.complex128)
            else:
                gq = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
                qmat, _ = np.linalg.qr(gq)
                if rng.random() < 0.5:
                    probe = qmat @ qmat.conj().T
                else:
                    probe = (qmat * rng.uniform(0.0, 1.0, size=rank)) @ qmat.conj().T
            probe_excess = max(
                probe_excess, float(np.trace(probe @ delta).real) - mp.value
            )
        probs = rng.dirichlet(np.ones(3))
        a_parts = [random_hermitian(dim, rng) for _ in range(3)]
        b_parts = [random_hermitian(dim, rng) for _ in range(3)]
        mixed = trace_distance(
            sum(p * m for p, m in zip(probs, a_parts)),
            sum(p * m for p, m in zip(probs, b_parts)),
        )
        convex_gap = mixed - sum(
            p * trace_distance(ma, mb) for p, ma, mb in zip(probs, a_parts, b_parts)
        )
        residual = max(sym, self_zero, tri, ident, probe_excess, convex_gap)
        ok = (
            sym <= 1e-12
            and self_zero <= 1e-12
            and tri <= 1e-12
            and ident < 1e-10
            and probe_excess <= slack
            and convex_gap <= 1e-12
        )
        details.append(
            {
                "case": f"instance-{i:03d}-dim{dim}",
                "symmetry": float(sym),
                "triangle_excess": float(tri),
                "projector_identity": float(ident),
                "probe_excess": float(probe_excess),
                "convexity_excess": float(convex_gap),
                "residual": float(residual),
                "ok": bool(ok),
            }
        )
    return _report("appendixB", seed, n_cases, details, t0)


_SUITE_FNS = {
    "thm1": run_thm1,
    "thm2": run_thm2,
    "thm3": run_thm3,
    "thm4": run_thm4,
    "thm5": run_thm5,
    "cloning": run_cloning,
    "lemma1": run_lemma1,
    "lemma2": run_lemma2,
    "appendixB": run_appendixB,
    "section3": run_section3,
}


def run_suite(name: str, seed: int, n_cases: int | None = None, slack: float = 1e-9) -> list[SuiteReport]:
    """Run one named suite, or every suite for name 'all'."""
    if name == "all":
        return [_SUITE_FNS[s](seed, n_cases, slack) for s in SUITE_NAMES]
    if name not in _SUITE_FNS:
        raise ValidationError(f"unknown suite {name!r}; choose from {('all',) + SUITE_NAMES}")
    return [_SUITE_FNS[name](seed, n_cases, slack)]


def run_all(seed: int, n_cases: int | None = None, slack: float = 1e-9) -> list[SuiteReport]:
    return run_suite("all", seed, n_cases, slack)


# -- report files --------------------------------------------------------------


def write_report(path, reports) -> None:
    """Line-delimited JSON: a schema header, then one record per suite.

    Timing is deliberately omitted so fixed-seed runs are byte-identical.
    """
    lines = [
        json.dumps(
            {"format": REPORT_FORMAT, "schema_version": SCHEMA_VERSION},
            sort_keys=True,
            separators=(",", ":"),
        )
    ]
    for r in reports:
        lines.append(
            json.dumps(
                {
                    "suite_name": r.suite_name,
                    "n_cases": r.n_cases,
                    "n_failures": r.n_failures,
                    "worst_residual": r.worst_residual,
                    "seed": r.seed,
                    "details": list(r.details),
                },
                sort_keys=True,
                separators=(",", ":"),
            )
        )
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def parse_report(path) -> list[SuiteReport]:
    """Read a report file back; elapsed time is not stored and reads as 0."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = [line for line in fh.read().splitlines() if line.strip()]
    except OSError as exc:
        raise ReportParseError(f"cannot read {path}: {exc}") from exc
    if not lines:
        raise ReportParseError(f"{path}: empty report")
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise ReportParseError(f"{path}: bad header: {exc}") from exc
    if header.get("format") != REPORT_FORMAT or header.get("schema_version") != SCHEMA_VERSION:
        raise ReportParseError(f"{path}: unrecognized header {header!r}")
    out = []
    for i, line in enumerate(lines[1:], start=2):
        try:
            rec = json.loads(line)
            out.append(
                SuiteReport(
                    suite_name=rec["suite_name"],
                    n_cases=int(rec["n_cases"]),
                    n_failures=int(rec["n_failures"]),
                    worst_residual=float(rec["worst_residual"]),
                    seed=int(rec["seed"]),
                    elapsed_seconds=0.0,
                    details=tuple(rec["details"]),
                )
            )
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise ReportParseError(f"{path}:{i}: bad suite record: {exc!r}") from exc
    return out
