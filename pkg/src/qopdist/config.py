"""Package-wide tolerances and environment switches."""

from __future__ import annotations

import os

# Hermiticity / positivity / normalization cuts used by the type validators.
TOL_HERM = 1e-10
TOL_PSD = 1e-10
TOL_TRACE = 1e-10
TOL_ORTHO = 1e-10
# Occurrence probabilities below this are treated as "the branch did not occur".
TOL_PROB = 1e-12


def default_tol() -> float:
    """Global absolute tolerance, overridable via QOPDIST_DEFAULT_TOL."""
    return float(os.environ.get("QOPDIST_DEFAULT_TOL", "1e-9"))


def numba_disabled() -> bool:
    """True when QOPDIST_NO_NUMBA requests the pure-numpy kernel path."""
    return os.environ.get("QOPDIST_NO_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}
