"""Monte Carlo statistics of output distances over the probability triangle.

A maximizer-shaped operation (T has unit and zero eigenvalues) turns every
point 0 <= p_n < p_m <= 1 into a matched input pair whose probability gap
and trace distance both equal p_m - p_n.  Sampling points uniformly and
randomizing the admissible weight splits yields empirical distributions of
the input distance, the normalized and subnormalized output distances, and
the relative distance increase; the checks here compare them against the
distribution-level bounds those quantities must obey.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .channels import QuantumOperation, apply
from .errors import ValidationError
from .maximizers import _unit_zero_eigenspaces, build_state_pair
from .metrics import trace_distance
from .states import DensityMatrix, validate_state

__all__ = [
    "BoundKind",
    "DominanceResult",
    "MeanOutputBound",
    "MomentCheck",
    "TrialRecord",
    "TrianglePoint",
    "dominance_implies_moments",
    "empirical_cdf",
    "mean_output_distance_bound",
    "moment_check",
    "pair_for_point",
    "run_trials",
    "sample_triangle",
    "sample_triangle_batch",
]


@dataclass(frozen=True)
class TrianglePoint:
    """A pair of occurrence probabilities with 0 <= p_n < p_m <= 1."""

    p_m: float
    p_n: float

    def __post_init__(self):
        if not (0.0 <= self.p_n < self.p_m <= 1.0):
            raise ValidationError(f"(p_m, p_n) = ({self.p_m}, {self.p_n}) outside the triangle")


def sample_triangle(rng: np.random.Generator) -> TrianglePoint:
    """One point uniform on the open triangle (two sorted uniforms, ties rejected)."""
    while True:
        a, b = rng.random(2)
        if a != b:
            return TrianglePoint(p_m=max(a, b), p_n=min(a, b))


def sample_triangle_batch(rng: np.random.Generator, n: int):
    """Arrays (p_m, p_n) of n uniform triangle points."""
    draws = rng.random((n, 2))
    pm = draws.max(axis=1)
    pn = draws.min(axis=1)
    bad = np.flatnonzero(pm == pn)
    for i in bad:  # pragma: no cover - measure-zero resample
        pt = sample_triangle(rng)
        pm[i], pn[i] = pt.p_m, pt.p_n
    return pm, pn


def pair_for_point(E: QuantumOperation, point: TrianglePoint, tol: float = 1e-8):
    """Matched pair whose occurrence probabilities are exactly the point.

    Distance target p_m - p_n, with the delta weights split so the unit
    eigenvectors carry p_n in total and the kernel ones carry 1 - p_m;
    splits within each set are uniform.
    """
    unit, zero = _unit_zero_eigenspaces(E, tol)
    nq, nr = unit.shape[1], zero.shape[1]
    d = point.p_m - point.p_n
    return build_state_pair(
        E,
        d,
        lambda_weights=np.full(nq, d / nq),
        kappa_weights=np.full(nr, d / nr),
        delta_lambda=np.full(nq, point.p_n / nq),
        delta_kappa=np.full(nr, (1.0 - point.p_m) / nr),
        tol=tol,
    )


@dataclass(frozen=True)
class TrialRecord:
    """One Monte Carlo trial: input distance, both output distances, and the
    relative increase when the normalized outputs drifted apart."""

    point: TrianglePoint
    d_in: float
    d_out_normalized: float
    d_out_subnormalized: float
    relative_increase: float | None

    def __post_init__(self):
        if abs(self.d_in - (self.point.p_m - self.point.p_n)) > 1e-9:
            raise ValidationError(
                f"d_in {self.d_in!r} != p_m - p_n = {self.point.p_m - self.point.p_n!r}"
            )


def _presample(E: QuantumOperation, n_trials: int, rng: np.random.Generator, tol: float):
    """Draw every random quantity up front so all execution paths agree."""
    unit, zero = _unit_zero_eigenspaces(E, tol)
    nq, nr = unit.shape[1], zero.shape[1]
    pm, pn = sample_triangle_batch(rng, n_trials)
    lam_frac = rng.dirichlet(np.ones(nq), size=n_trials)
    kap_frac = rng.dirichlet(np.ones(nr), size=n_trials)
    dlam_frac = rng.dirichlet(np.ones(nq), size=n_trials)
    dkap_frac = rng.dirichlet(np.ones(nr), size=n_trials)
    d = (pm - pn)[:, None]
    w_rho = np.hstack([d * lam_frac + pn[:, None] * dlam_frac, (1.0 - pm)[:, None] * dkap_frac])
    w_sig = np.hstack([pn[:, None] * dlam_frac, d * kap_frac + (1.0 - pm)[:, None] * dkap_frac])
    basis = np.hstack([unit, zero])
    return basis, w_rho, w_sig, pm, pn


def run_trials(
    E: QuantumOperation,
    n_trials: int,
    rng: np.random.Generator,
    path: str = "auto",
    tol: float = 1e-8,
) -> list[TrialRecord]:
    """Sample n_trials triangle points with randomized admissible weight
    splits and evaluate all three distances per trial.

    path "auto" routes through the compiled/vectorized kernels; "object"
    rebuilds every state and output matrix through the high-level API.
    Both consume identical random draws, so they agree to rounding.
    """
    if n_trials < 1:
        raise ValidationError(f"n_trials must be >= 1, got {n_trials}")
    if path not in ("auto", "object"):
        raise ValidationError(f"path must be 'auto' or 'object', got {path!r}")
    basis, w_rho, w_sig, pm, pn = _presample(E, n_trials, rng, tol)
    nb = basis.shape[1]
    op_mats = np.stack(
        [apply(E, np.outer(basis[:, j], basis[:, j].conj())) for j in range(nb)]
    )
    if path == "auto":
        d_in, d_norm, d_sub = _kernels.trial_stats(op_mats, w_rho, w_sig, pm, pn)
    else:
        d_in = np.empty(n_trials)
        d_norm = np.empty(n_trials)
        d_sub = np.empty(n_trials)
        for i in range(n_trials):
            rho = (basis * w_rho[i]) @ basis.conj().T
            sig = (basis * w_sig[i]) @ basis.conj().T
            d_in[i] = trace_distance(validate_state(rho), validate_state(sig))
            out_r = apply(E, rho)
            out_s = apply(E, sig)
            d_sub[i] = trace_distance(out_r, out_s)
            d_norm[i] = trace_distance(out_r / pm[i], out_s / pn[i])
    records = []
    for i in range(n_trials):
        rel = None
        if d_norm[i] > d_in[i]:
            rel = float((d_norm[i] - d_in[i]) / d_norm[i])
        records.append(
            TrialRecord(
                point=TrianglePoint(p_m=float(pm[i]), p_n=float(pn[i])),
                d_in=float(d_in[i]),
                d_out_normalized=float(d_norm[i]),
                d_out_subnormalized=float(d_sub[i]),
                relative_increase=rel,
            )
        )
    return records


class BoundKind(enum.Enum):
    """Dominating density for a moment bound: flat or downward wedge 2-2x."""

    UNIFORM = "uniform"
    WEDGE = "wedge"


@dataclass(frozen=True)
class MomentCheck:
    empirical_moment: float
    bound: float
    stderr: float
    holds: bool


def moment_check(samples, n: int, bound_kind: BoundKind) -> MomentCheck:
    """Compare the n-th empirical moment against its dominating-density value.

    Flat density on [0,1] gives 1/(n+1); the wedge density 2-2x gives
    2/(n^2+3n+2).  The check allows three standard errors of slack.
    """
    x = np.asarray(samples, dtype=float)
    if x.size == 0:
        raise ValidationError("moment_check needs at least one sample")
    if n < 1:
        raise ValidationError(f"moment order must be >= 1, got {n}")
    if x.min() < -1e-12 or x.max() > 1.0 + 1e-12:
        raise ValidationError(f"samples outside [0,1]: range [{x.min()}, {x.max()}]")
    if bound_kind is BoundKind.UNIFORM:
        bound = 1.0 / (n + 1)
    elif bound_kind is BoundKind.WEDGE:
        bound = 2.0 / (n * n + 3 * n + 2)
    else:
        raise ValidationError(f"unknown bound_kind {bound_kind!r}")
    powers = x**n
    m = float(powers.mean())
    sem = float(powers.std(ddof=1) / np.sqrt(x.size)) if x.size > 1 else 0.0
    return MomentCheck(empirical_moment=m, bound=bound, stderr=sem, holds=m <= bound + 3.0 * sem)


def empirical_cdf(samples, grid) -> np.ndarray:
    """P[X <= xi] for each xi of the grid."""
    x = np.sort(np.asarray(samples, dtype=float))
    g = np.asarray(grid, dtype=float)
    return np.searchsorted(x, g, side="right") / x.size


@dataclass(frozen=True)
class DominanceResult:
    """CDF dominance on a shared grid and the moment ordering it implies."""

    dominance_holds: bool
    orders: tuple
    moments_g: tuple
    moments_h: tuple
    moments_ok: bool
    worst_gap: float

    def __bool__(self):
        return self.dominance_holds and self.moments_ok


def _cdf_moment(grid: np.ndarray, cdf: np.ndarray, n: int) -> float:
    # E[X^n] = R^n - n * integral of x^(n-1) F(x) dx, for F(R) = 1.
    r = grid[-1]
    return float(r**n - n * np.trapezoid(grid ** (n - 1) * cdf, grid))


def dominance_implies_moments(cdf_g, cdf_h, orders, tol: float = 1e-9) -> DominanceResult:
    """Check CDF dominance G >= H pointwise, then the implied reversed
    ordering of moments E_G[X^n] <= E_H[X^n] for each requested order.

    Each CDF is a (grid, values) pair on a shared grid ending where both
    reach 1.  Moments come from integrating the CDFs, so the ordering is
    inherited from dominance exactly up to quadrature arithmetic.
    """
    grid_g, fg = (np.asarray(a, dtype=float) for a in cdf_g)
    grid_h, fh = (np.asarray(a, dtype=float) for a in cdf_h)
    if grid_g.shape != grid_h.shape or np.max(np.abs(grid_g - grid_h)) > 1e-12:
        raise ValidationError("CDFs must share one grid")
    if grid_g.size < 2:
        raise ValidationError("grid needs at least two points")
    for name, f in (("first", fg), ("second", fh)):
        if f.shape != grid_g.shape:
            raise ValidationError(f"{name} CDF length does not match grid")
        if abs(f[-1] - 1.0) > 1e-9:
            raise ValidationError(f"{name} CDF does not reach 1 at the grid end")
    gaps = fg - fh
    dominance = bool(np.all(gaps >= -tol))
    orders = tuple(int(n) for n in orders)
    mg = tuple(_cdf_moment(grid_g, fg, n) for n in orders)
    mh = tuple(_cdf_moment(grid_h, fh, n) for n in orders)
    moments_ok = dominance and all(a <= b + tol for a, b in zip(mg, mh))
    return DominanceResult(
        dominance_holds=dominance,
        orders=orders,
        moments_g=mg,
        moments_h=mh,
        moments_ok=moments_ok,
        worst_gap=float(gaps.min()),
    )


@dataclass(frozen=True)
class MeanOutputBound:
    mean_d_in: float
    mean_d_out_sub: float
    stderr: float
    holds: bool


def mean_output_distance_bound(records) -> MeanOutputBound:
    """Mean subnormalized output distance against its 1/6 ceiling (the mean
    input distance over the uniform triangle is 1/3, and outputs sit at
    half of inputs or less)."""
    if not records:
        raise ValidationError("need at least one trial record")
    d_in = np.array([r.d_in for r in records])
    d_sub = np.array([r.d_out_subnormalized for r in records])
    sem = float(d_sub.std(ddof=1) / np.sqrt(d_sub.size)) if d_sub.size > 1 else 0.0
    return MeanOutputBound(
        mean_d_in=float(d_in.mean()),
        mean_d_out_sub=float(d_sub.mean()),
        stderr=sem,
        holds=float(d_sub.mean()) <= 1.0 / 6.0 + 3.0 * sem,
    )
