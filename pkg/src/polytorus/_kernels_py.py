"""Pure-numpy fallback for the compiled kernels.

Same signatures and same chunk-free semantics as ``polytorus._ext``; the
wrappers in :mod:`polytorus.kernels` do the memory chunking, so agreement
between backends can be tested call for call.
"""

from __future__ import annotations

import numpy as np


def eval_trig(alpha: np.ndarray, cre: np.ndarray, cim: np.ndarray,
              theta: np.ndarray) -> np.ndarray:
    coeffs = cre + 1j * cim
    phases = theta @ alpha.T.astype(np.float64)  # (B, T)
    return np.exp(1j * phases) @ coeffs


def eval_exp(lam: np.ndarray, cre: np.ndarray, cim: np.ndarray,
             sre: np.ndarray, sim: np.ndarray) -> np.ndarray:
    coeffs = cre + 1j * cim
    exponent = -(sre[:, None] + 1j * sim[:, None]) * lam[None, :]
    return np.exp(exponent) @ coeffs


def abs_pow_mean(values: np.ndarray, p: float) -> float:
    return float(np.mean(np.abs(values) ** p))
