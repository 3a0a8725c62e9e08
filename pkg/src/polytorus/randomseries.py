"""Random signs on Dirichlet series: thin weights, sup-norm growth, Carleson energy.

The weight ``w_n`` integrates ``pi0(x) log log x / (x log^3 x)`` from ``n``
on, where ``pi0`` counts primes of a fixed finite set.  Substituting
``u = log x`` the integrand becomes ``pi0 * log(u) / u^3`` on each interval
where ``pi0`` is constant, and ``int log(u)/u^3 du = -(2 log u + 1)/(4 u^2)``
closes every piece, so the weight is evaluated exactly (up to rounding)
rather than by quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import bohr, rng
from .dirichlet import DirichletPolynomial, hinf_norm


def _log_cubed_primitive(u: float) -> float:
    """Antiderivative of ``log(u) / u**3``, vanishing at infinity."""
    return -(2.0 * math.log(u) + 1.0) / (4.0 * u * u)


def _segment(a: float, b: float) -> float:
    """``int_a^b log(u)/u^3 du`` for ``1 <= a <= b``."""
    return _log_cubed_primitive(b) - _log_cubed_primitive(a)


def ultra_thin_weight(prime_set: bohr.PrimeSet, n: int) -> float:
    """``w_n = int_n^inf pi0(x) log log x / (x log^3 x) dx``; ``w_1 = w_2 = 1``.

    Requires a finite prime set: with all primes, ``pi0(x) ~ x / log x``
    makes the integrand ``~ log log x / log^4 x`` and the tail diverges.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n <= 2:
        return 1.0
    if prime_set.all_primes:
        raise ValueError("the tail integral diverges over the full set of primes")
    cuts = [float(p) for p in prime_set.primes if p > n]
    total = 0.0
    lo = float(n)
    count = prime_set.count_up_to(lo)
    for cut in cuts:
        if count:
            total += count * _segment(math.log(lo), math.log(cut))
        lo = cut
        count += 1
    if count:
        total += count * (-_log_cubed_primitive(math.log(lo)))
    return total


@dataclass(frozen=True)
class UltraThinWeights:
    """Memoised ``w_n`` for one prime set."""

    prime_set: bohr.PrimeSet

    def __post_init__(self):
        object.__setattr__(self, "_cache", {})

    def weight(self, n: int) -> float:
        cache = self._cache
        if n not in cache:
            cache[n] = ultra_thin_weight(self.prime_set, n)
        return cache[n]


def rademacher_sample(f: DirichletPolynomial, seed: int,
                      trial: int = 0) -> DirichletPolynomial:
    """Flip each coefficient by a sign keyed to ``(seed, trial, n)``.

    The sign attached to frequency ``n`` does not depend on the length of
    ``f``, so truncations of one sample agree with samples of truncations.
    """
    ns = f.frequencies
    if ns.size == 0:
        return f
    signs = rng.rademacher_signs(seed, int(ns.max()) + 1, trial)
    return DirichletPolynomial(
        {int(n): c * signs[int(n)] for n, c in zip(ns, f.coefficients)})


def steinhaus_sample(f: DirichletPolynomial, seed: int,
                     trial: int = 0) -> DirichletPolynomial:
    """Multiply each coefficient by a uniform phase keyed to ``(seed, trial, n)``."""
    ns = f.frequencies
    if ns.size == 0:
        return f
    phases = rng.steinhaus_phases(seed, int(ns.max()) + 1, trial)
    return DirichletPolynomial(
        {int(n): c * phases[int(n)] for n, c in zip(ns, f.coefficients)})


@dataclass(frozen=True)
class KahaneRow:
    prime_count: int
    largest_prime: int
    mean_sup: float
    bound: float
    ratio: float


def kahane_experiment(prime_counts, trials: int = 50, seed: int = 0,
                      t_window: float = 100.0,
                      resolution: int = 1 << 12) -> list[KahaneRow]:
    """Mean sup of ``sum_{k<=K} +-p_k^{-s}`` against ``sqrt(K) sqrt(log log p_K)``.

    The comparison scale is ``sqrt(sum |a_k|^2) * sqrt(pi0(n)) * sqrt(log
    log n)`` with ``n = p_K``; for unit coefficients on the first ``K``
    primes both square roots collapse to ``sqrt(K)``.
    """
    rows = []
    for K in prime_counts:
        K = int(K)
        if K < 1:
            raise ValueError("prime counts must be positive")
        primes = [bohr.nth_prime(k) for k in range(1, K + 1)]
        f = DirichletPolynomial({p: 1.0 for p in primes})
        sups = []
        for trial in range(trials):
            sample = rademacher_sample(f, seed, trial)
            sups.append(hinf_norm(sample, t_window, resolution, certify=False).value)
        mean_sup = float(np.mean(sups))
        n = primes[-1]
        l2 = math.sqrt(sum(abs(c) ** 2 for c in f.coeffs.values()))
        loglog = math.log(math.log(n)) if n > math.e else 1.0
        bound = l2 * math.sqrt(float(K)) * math.sqrt(max(loglog, 1e-12))
        rows.append(KahaneRow(K, n, mean_sup, bound, mean_sup / bound))
    return rows


@dataclass(frozen=True)
class XEstimate:
    """Bracket for ``int_0^1 sigma ||T_sigma f'||_inf^2 dsigma``."""

    lower: float
    upper: float
    nodes: int


def estimate_X(f: DirichletPolynomial, t_window: float = 30.0,
               t_resolution: int = 1 << 10, sigma_levels: int = 18,
               refine: int = 32) -> XEstimate:
    """Two-sided quadrature of the weighted sup-norm energy of the derivative.

    Each dyadic band ``[2^-j-1, 2^-j]`` of sigma is refined uniformly; the
    sup over t is bracketed by the grid max and the grid max plus half a
    step times the Lipschitz constant ``sum |a_n| log^2 n * n^-sigma``.
    """
    fp = f.derivative()
    ns, cs = fp._arrays
    if ns.size == 0:
        return XEstimate(0.0, 0.0, 0)
    if refine % 2:
        refine += 1
    lam = np.log(ns.astype(np.float64))
    mags = np.abs(cs)
    nodes = [0.0]
    for j in range(sigma_levels - 1, -1, -1):
        hi = 2.0 ** (-j)
        lo = hi / 2.0
        nodes.extend(np.linspace(lo, hi, refine + 1)[:-1])
    nodes = np.array(nodes + [1.0])
    ts = np.linspace(-t_window, t_window, t_resolution)
    step = ts[1] - ts[0]
    decay = np.exp(-np.outer(nodes, lam))
    vals = (decay * cs[None, :]) @ np.exp(-1j * np.outer(lam, ts))
    sup_lower = np.abs(vals).max(axis=1)
    lip = decay @ (mags * lam)
    sup_upper = sup_lower + 0.5 * step * lip

    def integrate(sup):
        # bands are uniform inside, so composite Simpson applies per band;
        # the head below the smallest band contributes O(2^-2 sigma_levels)
        y = nodes * sup ** 2
        total = 0.5 * (nodes[1] - nodes[0]) * (y[0] + y[1])
        weights = np.full(refine + 1, 2.0)
        weights[1::2] = 4.0
        weights[0] = weights[-1] = 1.0
        for k in range(sigma_levels):
            i0 = 1 + k * refine
            h = nodes[i0 + 1] - nodes[i0]
            total += h / 3.0 * float(weights @ y[i0:i0 + refine + 1])
        return float(total)

    return XEstimate(integrate(sup_lower), integrate(sup_upper), int(nodes.size))


def single_term_energy(n: int) -> float:
    """Closed form of the energy for ``f = n^{-s}``: the signs cannot matter.

    ``|f'(sigma+it)| = log n * n^-sigma`` gives ``int_0^1 sigma log^2 n
    n^{-2 sigma} dsigma = (1 - n^{-2}(1 + 2 log n)) / 4``.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    return (1.0 - n ** (-2.0) * (1.0 + 2.0 * math.log(n))) / 4.0


@dataclass(frozen=True)
class BmoaRandomReport:
    rows: list
    weighted_sum: float
    weighted_tail: float
    converged: bool


def bmoa_random_experiment(prime_set: bohr.PrimeSet | None = None,
                           truncations=(32, 64, 128, 256, 512),
                           trials: int = 50, seed: int = 0,
                           t_window: float = 30.0,
                           t_resolution: int = 1 << 10,
                           weight_cutoff: int = 1 << 20) -> BmoaRandomReport:
    """Random signs on ``a_n = 1/(sqrt(n) log^2 n)`` over a thin smooth support.

    Reports the bracketed derivative energy per truncation length (its mean
    over trials staying bounded is the observable consequence of almost sure
    BMOA membership) together with the finiteness check of
    ``sum |a_n|^2 w_n log^2 n`` that drives it.
    """
    if prime_set is None:
        prime_set = bohr.PrimeSet((2, 3))
    truncations = sorted(int(N) for N in truncations)
    top = truncations[-1]
    support = [n for n in bohr.smooth_numbers(prime_set, top) if n >= 2]
    base = DirichletPolynomial(
        {n: 1.0 / (math.sqrt(n) * math.log(n) ** 2) for n in support})

    weights = UltraThinWeights(prime_set)
    total = 0.0
    half = 0.0
    for n in bohr.smooth_numbers(prime_set, weight_cutoff):
        if n < 2:
            continue
        a = 1.0 / (math.sqrt(n) * math.log(n) ** 2)
        term = a * a * weights.weight(n) * math.log(n) ** 2
        total += term
        if n <= weight_cutoff // 2:
            half += term
    tail = total - half
    converged = tail <= 1e-3 * total if total > 0 else True

    rows = []
    for N in truncations:
        lowers = []
        uppers = []
        for trial in range(trials):
            sample = rademacher_sample(base.truncate(N), seed, trial)
            est = estimate_X(sample, t_window, t_resolution)
            lowers.append(est.lower)
            uppers.append(est.upper)
        rows.append((N, float(np.mean(lowers)), float(np.mean(uppers))))
    return BmoaRandomReport(rows, total, tail, converged)
