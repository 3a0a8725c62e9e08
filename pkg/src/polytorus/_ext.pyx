# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled evaluation kernels for sparse exponential sums."""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, exp, sin

cnp.import_array()


def eval_trig(cnp.int64_t[:, ::1] alpha, double[::1] cre, double[::1] cim,
              double[:, ::1] theta):
    """Evaluate sum_t c_t * exp(i <alpha_t, theta_b>) for every row of theta."""
    cdef Py_ssize_t T = alpha.shape[0]
    cdef Py_ssize_t n = alpha.shape[1]
    cdef Py_ssize_t B = theta.shape[0]
    cdef Py_ssize_t b, t, d
    cdef double phase, re, im, c, s
    out = np.empty(B, dtype=np.complex128)
    cdef double complex[::1] ov = out
    for b in range(B):
        re = 0.0
        im = 0.0
        for t in range(T):
            phase = 0.0
            for d in range(n):
                phase += alpha[t, d] * theta[b, d]
            c = cos(phase)
            s = sin(phase)
            re += cre[t] * c - cim[t] * s
            im += cre[t] * s + cim[t] * c
        ov[b] = re + 1j * im
    return out


def eval_exp(double[::1] lam, double[::1] cre, double[::1] cim,
             double[::1] sre, double[::1] sim):
    """Evaluate sum_t c_t * exp(-(sre_b + i sim_b) * lam_t) per point b."""
    cdef Py_ssize_t T = lam.shape[0]
    cdef Py_ssize_t B = sre.shape[0]
    cdef Py_ssize_t b, t
    cdef double amp, phase, re, im, c, s
    out = np.empty(B, dtype=np.complex128)
    cdef double complex[::1] ov = out
    for b in range(B):
        re = 0.0
        im = 0.0
        for t in range(T):
            amp = exp(-sre[b] * lam[t])
            phase = -sim[b] * lam[t]
            c = cos(phase) * amp
            s = sin(phase) * amp
            re += cre[t] * c - cim[t] * s
            im += cre[t] * s + cim[t] * c
        ov[b] = re + 1j * im
    return out


def abs_pow_mean(double complex[::1] values, double p):
    """Mean of |v|**p over the array, accumulated in one pass."""
    cdef Py_ssize_t B = values.shape[0]
    cdef Py_ssize_t b
    cdef double acc = 0.0
    cdef double re, im
    for b in range(B):
        re = values[b].real
        im = values[b].imag
        acc += (re * re + im * im) ** (0.5 * p)
    return acc / B
