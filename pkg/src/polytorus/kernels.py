"""Backend selection and chunked wrappers for the evaluation kernels.

The compiled Cython extension is used when it imported cleanly; otherwise the
numpy fallback takes over.  Set ``POLYTORUS_KERNEL=python`` or ``=compiled``
to force a backend (the benchmark script does this to time both).
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py

_FORCED = os.environ.get("POLYTORUS_KERNEL", "auto")

if _FORCED == "python":
    _impl = _kernels_py
else:
    try:
        from . import _ext as _impl  # type: ignore[no-redef]
    except ImportError:
        if _FORCED == "compiled":
            raise
        _impl = _kernels_py


def backend_name() -> str:
    """``"compiled"`` or ``"python"``, whichever is active."""
    return "compiled" if _impl.__name__.endswith("_ext") else "python"


# chunk sizes keep the fallback's (B, T) temporaries around 32 MB
_MAX_CELLS = 2_000_000


def _chunk_rows(n_points: int, n_terms: int) -> int:
    return max(1, min(n_points, _MAX_CELLS // max(1, n_terms)))


def eval_trig_many(alpha: np.ndarray, coeffs: np.ndarray, theta: np.ndarray) -> np.ndarray:
    """Values of the trigonometric polynomial with exponents ``alpha`` at rows of ``theta``."""
    alpha = np.ascontiguousarray(alpha, dtype=np.int64)
    cre = np.ascontiguousarray(coeffs.real, dtype=np.float64)
    cim = np.ascontiguousarray(coeffs.imag, dtype=np.float64)
    theta = np.ascontiguousarray(theta, dtype=np.float64)
    if alpha.shape[0] == 0:
        return np.zeros(theta.shape[0], dtype=np.complex128)
    out = np.empty(theta.shape[0], dtype=np.complex128)
    step = _chunk_rows(theta.shape[0], alpha.shape[0])
    for lo in range(0, theta.shape[0], step):
        hi = min(lo + step, theta.shape[0])
        out[lo:hi] = _impl.eval_trig(alpha, cre, cim, theta[lo:hi])
    return out


def eval_exp_many(lam: np.ndarray, coeffs: np.ndarray, s: np.ndarray) -> np.ndarray:
    """Values of ``sum_t c_t exp(-s * lam_t)`` at the complex points ``s``."""
    lam = np.ascontiguousarray(lam, dtype=np.float64)
    cre = np.ascontiguousarray(coeffs.real, dtype=np.float64)
    cim = np.ascontiguousarray(coeffs.imag, dtype=np.float64)
    s = np.asarray(s, dtype=np.complex128)
    if lam.shape[0] == 0:
        return np.zeros(s.shape[0], dtype=np.complex128)
    sre = np.ascontiguousarray(s.real)
    sim = np.ascontiguousarray(s.imag)
    out = np.empty(s.shape[0], dtype=np.complex128)
    step = _chunk_rows(s.shape[0], lam.shape[0])
    for lo in range(0, s.shape[0], step):
        hi = min(lo + step, s.shape[0])
        out[lo:hi] = _impl.eval_exp(lam, cre, cim, sre[lo:hi], sim[lo:hi])
    return out


def abs_pow_mean(values: np.ndarray, p: float) -> float:
    """Mean of |v|**p, delegated so both backends stay comparable."""
    return float(_impl.abs_pow_mean(np.ascontiguousarray(values, dtype=np.complex128), float(p)))
