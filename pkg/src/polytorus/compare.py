"""Norm comparison tables and inequality checks for Dirichlet polynomials.

The named coefficient families grow to 10^7 terms, too many to keep as a
mapping, so sup and Bloch norms stream over coefficient chunks: the sup of a
nonnegative-coefficient polynomial is the value at t = 0, and the Bloch norm
is a sup over sigma of an axis profile (the derivative modulus is maximal on
the real axis for nonnegative coefficients), located by a coarse log-spaced
scan plus one linear rescan around the argmax.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import bohr, dirichlet

_CHUNK = 1 << 17

TABLE_FAMILIES = ("log-reciprocal", "hilbert", "prime-reciprocal", "double-exp")


def _family_arrays(name: str, length: int):
    """Chunk generator factory and term count for one named family."""
    if name in ("log-reciprocal", "hilbert"):
        def gen():
            lo = 2
            while lo <= length:
                hi = min(length, lo + _CHUNK - 1)
                ns = np.arange(lo, hi + 1, dtype=np.float64)
                yield ns, 1.0 / (ns * np.log(ns))
                lo = hi + 1
        return gen, max(length - 1, 0)
    if name == "prime-reciprocal":
        primes = np.array(bohr.primes_up_to(length), dtype=np.float64)
        def gen():
            for i in range(0, primes.size, _CHUNK):
                ns = primes[i:i + _CHUNK]
                yield ns, 1.0 / ns
        return gen, int(primes.size)
    if name == "double-exp":
        f = dirichlet.family("double-exp", length)
        ns = f.frequencies.astype(np.float64)
        cs = np.real(f.coefficients)
        def gen():
            yield ns, cs
        return gen, int(ns.size)
    raise ValueError(f"no streaming table for family {name!r}; "
                     f"choose one of {TABLE_FAMILIES}")


def _profile(gen_factory, sigmas: np.ndarray) -> np.ndarray:
    """``sigma * sum |a_n| log n * n^-sigma`` for each sigma, streamed."""
    acc = np.zeros(sigmas.size)
    for ns, cs in gen_factory():
        ln = np.log(ns)
        w = np.abs(cs) * ln
        acc += np.exp(-ln[:, None] * sigmas[None, :]).T @ w
    return sigmas * acc


def _stream_bloch(gen_factory, scan: int = 32) -> float:
    """Bloch norm of a nonnegative-coefficient polynomial by axis profile."""
    top = 1.0 / math.log(2.0)
    coarse = np.exp(np.linspace(math.log(1e-4), math.log(top), scan))
    prof = _profile(gen_factory, coarse)
    k = int(np.argmax(prof))
    lo = coarse[max(k - 1, 0)]
    hi = coarse[min(k + 1, scan - 1)]
    fine = np.linspace(lo, hi, scan)
    prof2 = _profile(gen_factory, fine)
    return float(max(prof.max(), prof2.max()))


@dataclass(frozen=True)
class RatioRow:
    length: int
    terms: int
    sup: float
    bloch: float
    bmoa: float
    sup_over_bloch: float
    loglog: float
    normalized: float


def ratio_table(name: str, lengths=(10**3, 10**4, 10**5, 10**6, 10**7),
                bmoa_cap: int = 20000, levels: int = 8, offsets: int = 64,
                nodes: int = 16) -> list[RatioRow]:
    """Sup, Bloch, and Carleson norms per length, with the sup/Bloch ratio
    normalised by ``log log N``.

    The Carleson column is computed only when the term count stays under
    ``bmoa_cap`` and is NaN otherwise; the sup and Bloch columns always
    stream, whatever the length.
    """
    rows = []
    for length in lengths:
        length = int(length)
        gen, terms = _family_arrays(name, length)
        sup = 0.0
        for _, cs in gen():
            sup += float(np.abs(cs).sum())
        bloch = _stream_bloch(gen)
        if terms and terms <= bmoa_cap:
            coeffs = {}
            for ns, cs in gen():
                for n, c in zip(ns, cs):
                    coeffs[int(n)] = float(c)
            f = dirichlet.DirichletPolynomial(coeffs)
            bmoa = dirichlet.bmoa_carleson_norm(
                f, levels=levels, t_window=(0.0, 50.0), offsets=offsets,
                nodes=nodes)
        else:
            bmoa = float("nan")
        ratio = sup / bloch if bloch > 0 else float("nan")
        loglog = math.log(math.log(length)) if length > math.e else float("nan")
        rows.append(RatioRow(length, terms, sup, bloch, bmoa, ratio, loglog,
                             ratio / loglog if loglog and loglog > 0 else float("nan")))
    return rows


def ratio_growth(rows: list[RatioRow]) -> tuple[float, float]:
    """Least-squares slope and intercept of log(sup/Bloch) against log log log N.

    A slope near 1 means the ratio tracks ``log log N``.
    """
    xs = np.log([r.loglog for r in rows])
    ys = np.log([r.sup_over_bloch for r in rows])
    slope, intercept = np.polyfit(xs, ys, 1)
    return float(slope), float(intercept)


@dataclass(frozen=True)
class BernsteinReport:
    derivative_sup: float
    sup_bound: float
    bloch_bound: float
    ok_sup: bool
    ok_bloch: bool


def bernstein_check(f: dirichlet.DirichletPolynomial, t_window: float = 100.0,
                    resolution: int = 1 << 14) -> BernsteinReport:
    """``||f'||_inf <= log N ||f||_inf`` and ``<= 4 log N ||f||_B``.

    The left side is a grid lower bound and the sup-norm right side a
    certified upper bound, so the first inequality cannot fail spuriously.
    A single term ``N^{-s}`` attains the first bound with equality.
    """
    N = f.length
    if N < 2:
        raise ValueError("need a frequency above 1")
    logN = math.log(N)
    lhs = dirichlet.hinf_norm(f.derivative(), t_window, resolution,
                              certify=False).value
    sup_upper = dirichlet.hinf_norm(f, t_window, resolution, certify=True).upper
    bloch = dirichlet.bloch_norm(f).value
    rhs_sup = logN * sup_upper
    rhs_bloch = 4.0 * logN * bloch
    return BernsteinReport(lhs, rhs_sup, rhs_bloch,
                           lhs <= rhs_sup * (1 + 1e-9) + 1e-12,
                           lhs <= rhs_bloch * (1 + 1e-6) + 1e-12)


@dataclass(frozen=True)
class ShiftReport:
    sup: float
    shifted_sup: float
    factor: float
    bound: float
    ok: bool


def shift_check(f: dirichlet.DirichletPolynomial, c: float = 0.5,
                t_window: float = 100.0, resolution: int = 1 << 14) -> ShiftReport:
    """``||f||_inf <= (1 - c)^{-1} ||f shifted by c / log N||_inf``.

    The left side is a grid lower bound and the right a certified upper, so
    a pass is sound.  With ``f = N^{-s}`` both sides are exact: 1 against
    ``e^{-c} / (1 - c)``.
    """
    if not 0.0 < c < 1.0:
        raise ValueError("c must lie in (0, 1)")
    N = f.length
    if N < 2:
        raise ValueError("need a frequency above 1")
    lhs = dirichlet.hinf_norm(f, t_window, resolution, certify=False).value
    shifted = f.shift(c / math.log(N))
    upper = dirichlet.hinf_norm(shifted, t_window, resolution, certify=True).upper
    bound = upper / (1.0 - c)
    return ShiftReport(lhs, upper, 1.0 / (1.0 - c), bound,
                       lhs <= bound * (1 + 1e-9) + 1e-12)
