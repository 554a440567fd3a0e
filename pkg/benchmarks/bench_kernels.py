"""Benchmark the compiled kernels against their pure-numpy twins.

Two hot paths: the qubit-gap grid search and the batched trial pipeline.
Run from the repository root:

    python3 benchmarks/bench_kernels.py

Set QOPDIST_NO_NUMBA=1 to confirm the numpy path is what you get when
the compiled backend is unavailable.
"""

from __future__ import annotations

import time

import numpy as np

from qopdist import _kernels
from qopdist.channels import apply
from qopdist.statlab import _presample
from qopdist.suites import _maximizer_shaped_op


def _time(fn, repeats=3):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_gap_grid(n=400):
    us = np.linspace(0.0, 1.0, n)
    vs = np.linspace(0.0, 1.0, n)
    etas = np.linspace(-1.0, 1.0, n)
    rows = []
    if _kernels.USE_NUMBA:
        _kernels._gap_grid_max_c(us[:4], vs[:4], etas[:4])  # compile once
        t = _time(lambda: _kernels._gap_grid_max_c(us, vs, etas))
        rows.append(("gap grid %d^3" % n, "numba", t))
    t = _time(lambda: _kernels.gap_grid_max_numpy(us, vs, etas))
    rows.append(("gap grid %d^3" % n, "numpy", t))
    return rows

def bench_trials(n=200_000):
    op = _maximizer_shaped_op(5, 2, 2)
    rng = np.random.default_rng(11)
    basis, w_rho, w_sig, pm, pn = _presample(op, n, rng, 1e-8)
    op_mats = np.stack(
        [apply(op, np.outer(basis[:, j], basis[:, j].conj())) for j in range(basis.shape[1])]
    )
    rows = []
    if _kernels.USE_NUMBA:
        _kernels._trial_stats_c(
            op_mats, w_rho[:4], w_sig[:4], pm[:4], pn[:4],
            np.empty(4), np.empty(4), np.empty(4),
        )  # compile once
        def numba_run():
            d_in = np.empty(n); d_norm = np.empty(n); d_sub = np.empty(n)
            _kernels._trial_stats_c(op_mats, w_rho, w_sig, pm, pn, d_in, d_norm, d_sub)
        t = _time(numba_run)
        rows.append(("trials %dk" % (n // 1000), "numba", t))
    t = _time(lambda: _kernels.trial_stats_numpy(op_mats, w_rho, w_sig, pm, pn))
    rows.append(("trials %dk" % (n // 1000), "numpy", t))
    return rows


def main():
    print(f"backend selected at import: {_kernels.kernel_backend()}")
    rows = bench_gap_grid() + bench_trials()
    width = max(len(r[0]) for r in rows)
    print(f"{'benchmark':<{width}}  backend  best-of-3 (s)")
    for name, backend, t in rows:
        print(f"{name:<{width}}  {backend:<7}  {t:10.4f}")
    paired = {}
    for name, backend, t in rows:
        paired.setdefault(name, {})[backend] = t
    for name, d in paired.items():
        if "numba" in d and "numpy" in d:
            print(f"{name}: numpy/numba speed ratio = {d['numpy'] / d['numba']:.2f}x")


if __name__ == "__main__":
    main()
