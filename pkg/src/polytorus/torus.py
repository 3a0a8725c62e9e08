"""Trigonometric polynomials on the n-torus and their norms.

Evaluation on full tensor grids goes through an FFT after wrapping exponents
modulo the grid size; that is exact (no aliasing) as long as the grid exceeds
the per-coordinate exponent span, which :func:`grid_values` enforces.  Norms
for p in {2, 4, 6} can instead be computed exactly from coefficients by
self-convolution.  Monte Carlo sampling uses the counter-based streams of
:mod:`polytorus.rng`, so results are reproducible bit for bit for a fixed
chunk size regardless of scheduling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType

import numpy as np
import scipy.fft

from . import kernels, rng
from .budget import require_budget


@dataclass(frozen=True)
class NormEstimate:
    """A computed norm plus how it was computed.

    ``stderr`` is nonzero only for Monte Carlo estimates; ``resolution`` is
    the grid size per axis or the sample count.  ``upper`` carries the
    certified upper bound when one was requested.
    """

    value: float
    p: float
    method: str
    stderr: float = 0.0
    resolution: int = 0
    upper: float | None = None

    def csv_row(self) -> str:
        return f"{self.method},{self.p},{self.value!r},{self.stderr!r},{self.resolution}"


@dataclass(frozen=True)
class TorusPolynomial:
    """Finite trigonometric polynomial on T^dims with integer exponents.

    ``terms`` maps exponent tuples (length ``dims``, negative entries fine)
    to complex coefficients.  Zero coefficients are dropped on construction
    and the mapping is wrapped read-only; treat instances as immutable.
    """

    dims: int
    terms: MappingProxyType

    def __init__(self, dims: int, terms):
        if dims < 1:
            raise ValueError("dims must be >= 1")
        cleaned = {}
        for alpha, c in dict(terms).items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != dims:
                raise ValueError(f"exponent {alpha} does not have length {dims}")
            c = complex(c)
            if c != 0:
                cleaned[alpha] = c
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "terms", MappingProxyType(cleaned))

    # --- construction helpers -------------------------------------------------

    @classmethod
    def monomial(cls, dims: int, alpha, c=1.0) -> "TorusPolynomial":
        return cls(dims, {tuple(alpha): c})

    @classmethod
    def zero(cls, dims: int) -> "TorusPolynomial":
        return cls(dims, {})

    # --- array views ----------------------------------------------------------

    @cached_property
    def _arrays(self):
        if not self.terms:
            return (np.zeros((0, self.dims), dtype=np.int64),
                    np.zeros(0, dtype=np.complex128))
        alpha = np.array(list(self.terms.keys()), dtype=np.int64)
        coeffs = np.array(list(self.terms.values()), dtype=np.complex128)
        return alpha, coeffs

    @property
    def exponents(self) -> np.ndarray:
        return self._arrays[0]

    @property
    def coefficients(self) -> np.ndarray:
        return self._arrays[1]

    def degree_span(self) -> list[tuple[int, int]]:
        """Per-coordinate (min, max) exponent; (0, 0) for the zero polynomial."""
        alpha, _ = self._arrays
        if alpha.shape[0] == 0:
            return [(0, 0)] * self.dims
        return [(int(lo), int(hi)) for lo, hi in zip(alpha.min(axis=0), alpha.max(axis=0))]

    # --- algebra --------------------------------------------------------------

    def __add__(self, other: "TorusPolynomial") -> "TorusPolynomial":
        if other.dims != self.dims:
            raise ValueError("dimension mismatch")
        merged = dict(self.terms)
        for a, c in other.terms.items():
            merged[a] = merged.get(a, 0.0) + c
        return TorusPolynomial(self.dims, merged)

    def __sub__(self, other: "TorusPolynomial") -> "TorusPolynomial":
        return self + other.scale(-1.0)

    def scale(self, c) -> "TorusPolynomial":
        return TorusPolynomial(self.dims, {a: c * v for a, v in self.terms.items()})

    def __mul__(self, other: "TorusPolynomial") -> "TorusPolynomial":
        if other.dims != self.dims:
            raise ValueError("dimension mismatch")
        a1, c1 = self._arrays
        a2, c2 = other._arrays
        alpha, coeffs = _convolve(a1, c1, a2, c2)
        return TorusPolynomial(self.dims, dict(zip(map(tuple, alpha.tolist()), coeffs)))

    # --- evaluation -----------------------------------------------------------

    def eval(self, theta) -> complex:
        """Direct summation at a single point; reference path for tests."""
        theta = np.asarray(theta, dtype=np.float64)
        total = 0.0 + 0.0j
        for alpha, c in self.terms.items():
            total += c * np.exp(1j * float(np.dot(alpha, theta)))
        return complex(total)

    def eval_many(self, theta: np.ndarray) -> np.ndarray:
        """Values at each row of ``theta`` via the active kernel backend."""
        alpha, coeffs = self._arrays
        return kernels.eval_trig_many(alpha, coeffs, np.atleast_2d(theta))


# --- coefficient convolution (shared by products and even-exact norms) --------

def _convolve(a1, c1, a2, c2):
    """Sparse convolution of two coefficient arrays over Z^n."""
    if a1.shape[0] == 0 or a2.shape[0] == 0:
        return np.zeros((0, a1.shape[1]), dtype=np.int64), np.zeros(0, dtype=np.complex128)
    n = a1.shape[1]
    lo = a1.min(axis=0) + a2.min(axis=0)
    hi = a1.max(axis=0) + a2.max(axis=0)
    span = hi - lo + 1
    strides = np.ones(n, dtype=np.int64)
    for d in range(n - 2, -1, -1):
        strides[d] = strides[d + 1] * span[d + 1]
    if float(np.prod(span.astype(np.float64))) > 2**62:
        raise ValueError("exponent range too large to pack for convolution")

    k1 = a1 @ strides
    k2 = a2 @ strides
    keys = (k1[:, None] + k2[None, :]).ravel()
    prods = (c1[:, None] * c2[None, :]).ravel()
    uniq, inv = np.unique(keys, return_inverse=True)
    acc = np.bincount(inv, weights=prods.real) + 1j * np.bincount(inv, weights=prods.imag)
    keep = acc != 0
    uniq, acc = uniq[keep], acc[keep]
    # decode packed keys back to exponent rows
    base = lo @ strides
    rel = uniq - base
    alpha = np.empty((len(uniq), n), dtype=np.int64)
    for d in range(n):
        q = rel // strides[d]
        alpha[:, d] = q + lo[d]
        rel = rel - q * strides[d]
    return alpha, acc


# --- grid evaluation ----------------------------------------------------------

def grid_values(f: TorusPolynomial, grid: int, budget: int | None = None) -> np.ndarray:
    """Values of ``f`` on the uniform grid (2*pi*k/grid)_k, shape ``(grid,)*dims``.

    Requires ``grid`` to exceed every per-coordinate exponent span so the
    modular placement of coefficients is alias-free.
    """
    require_budget(grid ** f.dims, budget, "grid evaluation")
    for lo, hi in f.degree_span():
        if hi - lo >= grid:
            raise ValueError(f"grid {grid} does not exceed exponent span {hi - lo}")
    shape = (grid,) * f.dims
    A = np.zeros(shape, dtype=np.complex128)
    alpha, coeffs = f._arrays
    if alpha.shape[0]:
        idx = tuple((alpha[:, d] % grid) for d in range(f.dims))
        np.add.at(A, idx, coeffs)
    vals = scipy.fft.ifftn(A, overwrite_x=True)
    vals *= grid ** f.dims
    return vals


def _default_grid(f: TorusPolynomial) -> int:
    span = max((hi - lo) for lo, hi in f.degree_span())
    g = 256
    while g <= 2 * span + 1:
        g *= 2
    return g


def _lipschitz_bound(f: TorusPolynomial) -> float:
    alpha, coeffs = f._arrays
    if alpha.shape[0] == 0:
        return 0.0
    return float(np.sum(np.abs(coeffs) * np.abs(alpha).sum(axis=1)))


def norm(f: TorusPolynomial, p: float, method: str = "grid",
         resolution: int | None = None, samples: int = 100_000, seed: int = 0,
         budget: int | None = None, certify: bool = False) -> NormEstimate:
    """L^p norm of ``f`` against normalized Haar measure on the torus.

    methods
        ``grid``: tensor-grid quadrature (exact at p=2 by Parseval);
        ``even-exact``: coefficient self-convolution, p in {2, 4, 6} only;
        ``monte-carlo``: chunked uniform sampling with a standard error.

    ``p = inf`` reports the max of |f| over grid points or samples, a lower
    bound on the sup; with ``certify=True`` the grid method also reports the
    Lipschitz-padded upper bound ``max + (pi/grid) * sum |c| * |alpha|_1``.
    """
    if p <= 0:
        raise ValueError("p must be positive")
    if method == "even-exact":
        return _norm_even_exact(f, p, budget)
    if method == "grid":
        grid = resolution or _default_grid(f)
        vals = grid_values(f, grid, budget)
        absv = np.abs(vals)
        if math.isinf(p):
            value = float(absv.max()) if absv.size else 0.0
            upper = value + (math.pi / grid) * _lipschitz_bound(f) if certify else None
            return NormEstimate(value, p, "grid", 0.0, grid, upper)
        value = float(np.mean(absv ** p) ** (1.0 / p))
        return NormEstimate(value, p, "grid", 0.0, grid)
    if method == "monte-carlo":
        return _norm_monte_carlo(f, p, samples, seed, budget)
    raise ValueError(f"unknown method {method!r}")


def _norm_even_exact(f: TorusPolynomial, p: float, budget: int | None) -> NormEstimate:
    if p not in (2, 4, 6):
        raise ValueError("even-exact norms are available for p in {2, 4, 6}")
    alpha, coeffs = f._arrays
    if p == 2:
        power_alpha, power_coeffs = alpha, coeffs
    else:
        require_budget(alpha.shape[0] ** 2, budget, "coefficient convolution")
        power_alpha, power_coeffs = _convolve(alpha, coeffs, alpha, coeffs)
        if p == 6:
            require_budget(power_alpha.shape[0] * alpha.shape[0], budget,
                           "coefficient convolution")
            power_alpha, power_coeffs = _convolve(power_alpha, power_coeffs, alpha, coeffs)
    value = float(np.sum(np.abs(power_coeffs) ** 2) ** (1.0 / p))
    return NormEstimate(value, p, "even-exact", 0.0, 0)


def _norm_monte_carlo(f: TorusPolynomial, p: float, samples: int, seed: int,
                      budget: int | None) -> NormEstimate:
    require_budget(samples, budget, "monte-carlo sampling")
    if math.isinf(p):
        best = 0.0
        for chunk, count in rng.chunks(samples):
            theta = rng.uniform_angles(seed, count, f.dims, rng.STREAM_MC, chunk)
            vals = f.eval_many(theta)
            best = max(best, float(np.abs(vals).max()))
        return NormEstimate(best, p, "monte-carlo", 0.0, samples)
    total = 0.0
    total_sq = 0.0
    for chunk, count in rng.chunks(samples):
        theta = rng.uniform_angles(seed, count, f.dims, rng.STREAM_MC, chunk)
        powers = np.abs(f.eval_many(theta)) ** p
        total += float(powers.sum())
        total_sq += float((powers ** 2).sum())
    mean = total / samples
    var = max(total_sq / samples - mean ** 2, 0.0)
    se_mean = math.sqrt(var / samples)
    value = mean ** (1.0 / p)
    # delta method: d/dx x^(1/p) at the mean
    stderr = se_mean * value / (p * mean) if mean > 0 else se_mean
    return NormEstimate(value, p, "monte-carlo", stderr, samples)


# --- projections --------------------------------------------------------------

def riesz_project(f: TorusPolynomial) -> TorusPolynomial:
    """Keep the terms whose exponents are nonnegative in every coordinate."""
    kept = {a: c for a, c in f.terms.items() if all(e >= 0 for e in a)}
    return TorusPolynomial(f.dims, kept)


def multiplier_project(f: TorusPolynomial, keep) -> TorusPolynomial:
    """Indicator multiplier: keep terms whose exponent satisfies ``keep``.

    ``keep`` is a predicate on exponent tuples, or any object with a
    ``contains`` method (a lattice polytope, say).
    """
    if hasattr(keep, "contains"):
        predicate = keep.contains
    else:
        predicate = keep
    kept = {a: c for a, c in f.terms.items() if predicate(a)}
    return TorusPolynomial(f.dims, kept)


# --- circular Dirichlet kernels ----------------------------------------------

def dirichlet_kernel(radius: float, dims: int, budget: int | None = None) -> TorusPolynomial:
    """Unit-coefficient kernel over lattice points with |alpha|_2 <= radius."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    half = int(math.floor(radius))
    require_budget((2 * half + 1) ** dims, budget, "lattice enumeration")
    axes = np.arange(-half, half + 1, dtype=np.int64)
    mesh = np.meshgrid(*([axes] * dims), indexing="ij")
    pts = np.stack([m.ravel() for m in mesh], axis=1)
    inside = (pts.astype(np.float64) ** 2).sum(axis=1) <= radius ** 2 + 1e-9
    pts = pts[inside]
    return TorusPolynomial(dims, {tuple(row): 1.0 for row in pts.tolist()})


def kernel_scaling_experiment(dims: int, radii, grid_factor: int = 8,
                              budget: int | None = None):
    """L^1 norms of circular kernels over ``radii`` plus a log-log slope fit.

    Returns ``(rows, slope)`` where each row is ``(R, term_count, l1_norm)``.
    """
    rows = []
    for radius in radii:
        kernel = dirichlet_kernel(radius, dims, budget)
        grid = _pow2_at_least(max(grid_factor * int(radius), 2 * int(radius) + 2))
        est = norm(kernel, 1.0, "grid", resolution=grid, budget=budget)
        rows.append((float(radius), len(kernel.terms), est.value))
    radii_arr = np.array([r for r, _, _ in rows])
    vals = np.array([v for _, _, v in rows])
    slope = float(np.polyfit(np.log(radii_arr), np.log(vals), 1)[0])
    return rows, slope


def _pow2_at_least(m: int) -> int:
    g = 1
    while g < m:
        g *= 2
    return g


# --- product polynomial scaling ----------------------------------------------

def refor_experiment(q: float, dims: int, radii, grid_factor: int = 8,
                     budget: int | None = None):
    """Compare ||f~||_q with ||ball truncation of f~||_1 for box products f~.

    ``f~`` is the product of one-dimensional symmetric box kernels of length
    2R+1; its ball truncation is the circular kernel.  Requires
    ``dims > q / (2 - q)`` (and q < 2), the regime where the L^1 norm of the
    truncation outgrows ||f~||_q so the truncation cannot be contractive on
    L^q.  Returns ``(rows, q_exponent, ratio_exponent)``; each row is
    ``(R, full_norm_q, ball_norm_1, ratio)``.
    """
    if not 0 < q < 2:
        raise ValueError("q must lie in (0, 2)")
    if dims <= q / (2 - q):
        raise ValueError(
            f"dims must exceed q/(2-q) = {q / (2 - q):.6g} for the truncation "
            "to beat the product norm; raise dims or lower q")
    rows = []
    for radius in radii:
        half = int(radius)
        one_dim = TorusPolynomial(1, {(a,): 1.0 for a in range(-half, half + 1)})
        fine = _pow2_at_least(max(4096, 64 * half))
        norm_1d = norm(one_dim, q, "grid", resolution=fine, budget=budget).value
        full_q = norm_1d ** dims
        ball = dirichlet_kernel(radius, dims, budget)
        # a full-rate grid in 4 dimensions would not fit in memory
        factor = grid_factor if dims <= 2 else min(grid_factor, 4)
        grid = _pow2_at_least(max(factor * half, 2 * half + 2))
        ball_1 = norm(ball, 1.0, "grid", resolution=grid, budget=budget).value
        rows.append((float(radius), full_q, ball_1, ball_1 / full_q))
    logr = np.log([r for r, _, _, _ in rows])
    q_exponent = float(np.polyfit(logr, np.log([v for _, v, _, _ in rows]), 1)[0])
    ratio_exponent = float(np.polyfit(logr, np.log([v for _, _, _, v in rows]), 1)[0])
    return rows, q_exponent, ratio_exponent


# --- analytic-projection ratio search ----------------------------------------

def projection_ratio_search(p: float, dims: int = 1, degree: int = 3,
                            starts: int = 8, iterations: int = 300,
                            resolution: int | None = None, seed: int = 0,
                            budget: int | None = None):
    """Hill-climb ``||P+ f||_p / max_grid |f|`` over real coefficient vectors.

    The family is the full exponent box ``{-degree..degree}^dims`` with real
    coefficients.  Since the grid max of |f| is at least the quadrature
    p-norm of f, the reported ratio at p = 2 can never exceed 1; for p > 2 it
    probes how far the analytic projection can push above the sup norm.
    Returns ``(best_ratio, witness)`` and is deterministic in ``seed``.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    axes = np.arange(-degree, degree + 1, dtype=np.int64)
    mesh = np.meshgrid(*([axes] * dims), indexing="ij")
    box = np.stack([m.ravel() for m in mesh], axis=1)
    grid = resolution or _pow2_at_least(max(64, 8 * (2 * degree + 1)))
    require_budget(grid ** dims * starts, budget, "search grid")

    def ratio_of(coeffs: np.ndarray) -> float:
        f = TorusPolynomial(dims, dict(zip(map(tuple, box.tolist()), coeffs)))
        sup = norm(f, math.inf, "grid", resolution=grid, budget=budget).value
        if sup == 0:
            return 0.0
        plus = riesz_project(f)
        val = norm(plus, p, "grid", resolution=grid, budget=budget).value
        return val / sup

    best_ratio = 0.0
    best_coeffs = np.zeros(box.shape[0])
    for start in range(starts):
        gen = rng.generator(seed, rng.STREAM_SEARCH, start)
        coeffs = gen.standard_normal(box.shape[0])
        current = ratio_of(coeffs)
        scale = 1.0
        for step in range(iterations):
            idx = int(gen.integers(box.shape[0]))
            trial = coeffs.copy()
            trial[idx] += scale * gen.standard_normal()
            value = ratio_of(trial)
            if value > current:
                coeffs, current = trial, value
            scale *= 0.995
        if current > best_ratio:
            best_ratio, best_coeffs = current, coeffs
    witness = TorusPolynomial(dims, dict(zip(map(tuple, box.tolist()), best_coeffs)))
    return best_ratio, witness


# --- sup-norm comparison for analytic polynomials -----------------------------

SUP_COMPARISON_CONSTANT = 2.0 * math.pi ** (1.0 / math.log(2.0))


def multivar_sup_check(f: TorusPolynomial, degree: int,
                       resolution: int | None = None, budget: int | None = None):
    """Check ``sup |f| <= 2 pi^(1/log 2) ||f||_{n log d}`` on a grid.

    ``f`` must be analytic (no negative exponents) with total degree at most
    ``degree`` and ``degree >= 2``.  The sup side is a grid max (a lower
    bound), the norm side a grid quadrature, so a reported violation would be
    genuine up to quadrature error.  Returns
    ``(sup_estimate, small_norm, bound, ok)``.
    """
    if degree < 2:
        raise ValueError("degree must be >= 2")
    alpha, _ = f._arrays
    if alpha.shape[0] and alpha.min() < 0:
        raise ValueError("polynomial must be analytic (nonnegative exponents)")
    if alpha.shape[0] and alpha.sum(axis=1).max() > degree:
        raise ValueError("total degree exceeds the stated bound")
    p = f.dims * math.log(degree)
    grid = resolution or _pow2_at_least(max(128, 8 * (degree + 1)))
    sup = norm(f, math.inf, "grid", resolution=grid, budget=budget).value
    small = norm(f, p, "grid", resolution=grid, budget=budget).value
    bound = SUP_COMPARISON_CONSTANT * small
    return sup, small, bound, sup <= bound * (1 + 1e-9)
