"""Dirichlet polynomials: norms, criteria and reference families.

A Dirichlet polynomial ``sum a_n n^{-s}`` is stored sparsely by integer
frequency.  Norm routines either work directly on the half-plane side
(grids in t, quadrature in sigma) or pull the polynomial back to the
polytorus through the prime-exponent lift, where the torus machinery
applies.  Sup-type quantities always come as a grid lower bound, optionally
with a Lipschitz-certified upper bound, and sup-type criteria over a scale
parameter are evaluated exactly at every breakpoint of their piecewise
structure.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType

import numpy as np

from . import bohr, kernels, rng, torus
from .budget import require_budget
from .torus import NormEstimate, TorusPolynomial


@dataclass(frozen=True)
class DirichletPolynomial:
    """Finite sum ``a_n n^{-s}`` with integer frequencies ``n >= 1``."""

    coeffs: MappingProxyType

    def __init__(self, coeffs):
        cleaned = {}
        for n, c in dict(coeffs).items():
            n = int(n)
            if n < 1:
                raise ValueError("frequencies must be >= 1")
            c = complex(c)
            if c != 0:
                cleaned[n] = c
        object.__setattr__(self, "coeffs", MappingProxyType(cleaned))

    @property
    def length(self) -> int:
        """Largest stored frequency (1 for the zero polynomial)."""
        return max(self.coeffs, default=1)

    @cached_property
    def _arrays(self):
        ns = np.array(sorted(self.coeffs), dtype=np.int64)
        cs = np.array([self.coeffs[int(n)] for n in ns], dtype=np.complex128)
        return ns, cs

    @property
    def frequencies(self) -> np.ndarray:
        return self._arrays[0]

    @property
    def coefficients(self) -> np.ndarray:
        return self._arrays[1]

    # --- algebra and calculus -------------------------------------------------

    def __add__(self, other: "DirichletPolynomial") -> "DirichletPolynomial":
        merged = dict(self.coeffs)
        for n, c in other.coeffs.items():
            merged[n] = merged.get(n, 0.0) + c
        return DirichletPolynomial(merged)

    def scale(self, c) -> "DirichletPolynomial":
        return DirichletPolynomial({n: c * v for n, v in self.coeffs.items()})

    def __mul__(self, other: "DirichletPolynomial") -> "DirichletPolynomial":
        ns1, cs1 = self._arrays
        ns2, cs2 = other._arrays
        if len(ns1) == 0 or len(ns2) == 0:
            return DirichletPolynomial({})
        prods = (ns1[:, None] * ns2[None, :]).ravel()
        vals = (cs1[:, None] * cs2[None, :]).ravel()
        uniq, inv = np.unique(prods, return_inverse=True)
        acc = np.bincount(inv, weights=vals.real) + 1j * np.bincount(inv, weights=vals.imag)
        return DirichletPolynomial({int(n): c for n, c in zip(uniq, acc) if c != 0})

    def derivative(self) -> "DirichletPolynomial":
        """Termwise derivative ``-a_n log n * n^{-s}`` (the n=1 term drops)."""
        return DirichletPolynomial(
            {n: -c * math.log(n) for n, c in self.coeffs.items() if n > 1}
        )

    def shift(self, sigma: float) -> "DirichletPolynomial":
        """Translate ``sigma`` to the right: coefficients become ``a_n n^{-sigma}``."""
        return DirichletPolynomial({n: c * n ** (-float(sigma)) for n, c in self.coeffs.items()})

    def truncate(self, length: int) -> "DirichletPolynomial":
        return DirichletPolynomial({n: c for n, c in self.coeffs.items() if n <= length})

    def is_nonnegative(self) -> bool:
        return all(c.imag == 0 and c.real >= 0 for c in self.coeffs.values())

    # --- evaluation -----------------------------------------------------------

    def eval(self, s: complex) -> complex:
        """Direct summation; reference path."""
        return complex(sum(c * np.exp(-complex(s) * math.log(n)) for n, c in self.coeffs.items()))

    def eval_many(self, s: np.ndarray) -> np.ndarray:
        ns, cs = self._arrays
        lam = np.log(ns.astype(np.float64))
        return kernels.eval_exp_many(lam, cs, np.asarray(s, dtype=np.complex128))


def d_eval(f: DirichletPolynomial, s) -> complex:
    return f.eval(s)


# --- Bohr lift ----------------------------------------------------------------

def bohr_lift(f: DirichletPolynomial) -> TorusPolynomial:
    """Image on the polytorus: ``n^{-s}`` becomes the monomial of its prime exponents."""
    dims = 1
    indices = {}
    for n in f.coeffs:
        mi = bohr.factorize(n)
        indices[n] = mi
        dims = max(dims, mi.max_position)
    return TorusPolynomial(dims, {indices[n].to_dense(dims): c for n, c in f.coeffs.items()})


# --- H^q norms ----------------------------------------------------------------

def hq_norm(f: DirichletPolynomial, q: float, method: str = "auto",
            samples: int = 100_000, seed: int = 0,
            budget: int | None = None) -> NormEstimate:
    """H^q norm via Haar measure on the polytorus.

    ``q = 2`` is Parseval; ``q in {4, 6}`` uses exact integer-frequency
    convolution (a code path independent of the torus even-exact norms, so
    the two can cross-check each other); anything else samples the Bohr
    lift.  ``method`` forces ``"monte-carlo"`` when the exact route exists.
    """
    if q <= 0:
        raise ValueError("q must be positive")
    if method not in ("auto", "monte-carlo"):
        raise ValueError(f"unknown method {method!r}; use 'auto' or 'monte-carlo'")
    ns, cs = f._arrays
    if method == "auto" and q in (2.0, 4.0, 6.0):
        if q == 2.0:
            return NormEstimate(float(np.sqrt(np.sum(np.abs(cs) ** 2))), q, "even-exact")
        require_budget(len(ns) ** 2, budget, "frequency convolution")
        square = f * f
        if q == 4.0:
            _, c2 = square._arrays
            return NormEstimate(float(np.sum(np.abs(c2) ** 2) ** 0.25), q, "even-exact")
        require_budget(len(square.coeffs) * len(ns), budget, "frequency convolution")
        cube = square * f
        _, c3 = cube._arrays
        return NormEstimate(float(np.sum(np.abs(c3) ** 2) ** (1.0 / 6.0)), q, "even-exact")
    lifted = bohr_lift(f)
    return torus.norm(lifted, q, "monte-carlo", samples=samples, seed=seed, budget=budget)


# --- sup norm on the line -----------------------------------------------------

def hinf_norm(f: DirichletPolynomial, t_window: float = 100.0,
              resolution: int = 1 << 14, certify: bool = True,
              budget: int | None = None) -> NormEstimate:
    """Sup of |f| on the imaginary axis over ``[-T, T]``.

    The value is the grid max, a true lower bound for the sup norm; the
    certified upper bound adds half a step times the Lipschitz constant
    ``sum |a_n| log n``, bounding the sup over the window (by almost
    periodicity a long window is also an excellent proxy for the line).
    """
    require_budget(resolution, budget, "t-grid")
    ts = np.linspace(-t_window, t_window, resolution)
    vals = f.eval_many(1j * ts)
    lower = float(np.abs(vals).max()) if len(vals) else 0.0
    upper = None
    if certify:
        ns, cs = f._arrays
        lip = float(np.sum(np.abs(cs) * np.log(ns.astype(np.float64)))) if len(ns) else 0.0
        step = 2.0 * t_window / (resolution - 1) if resolution > 1 else 0.0
        upper = lower + 0.5 * step * lip
    return NormEstimate(lower, math.inf, "grid", 0.0, resolution, upper)


def hinf_ascent(f: DirichletPolynomial, starts: int = 4, sweeps: int = 6,
                angle_grid: int = 64, seed: int = 0) -> float:
    """Heuristic sharpening of the sup norm by coordinate ascent on the Bohr lift.

    Any torus point gives a valid lower bound for the line sup norm because
    the vertical flow is dense in the polytorus.
    """
    lifted = bohr_lift(f)
    alpha, coeffs = lifted._arrays
    if alpha.shape[0] == 0:
        return 0.0
    best = 0.0
    angles = np.linspace(0.0, 2.0 * np.pi, angle_grid, endpoint=False)
    for start in range(starts):
        gen = rng.generator(seed, rng.STREAM_SEARCH, start)
        theta = gen.random(lifted.dims) * 2.0 * np.pi
        for _ in range(sweeps):
            for d in range(lifted.dims):
                trial = np.tile(theta, (angle_grid, 1))
                trial[:, d] = angles
                vals = np.abs(lifted.eval_many(trial))
                k = int(np.argmax(vals))
                theta = trial[k]
        best = max(best, float(np.abs(lifted.eval(theta))))
    return best


# --- Bloch norm ---------------------------------------------------------------

def _golden_max(fun, lo: float, hi: float, tol: float = 1e-12) -> tuple[float, float]:
    """Golden-section maximizer for a unimodal function on [lo, hi]."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = fun(c), fun(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = fun(d)
    x = (a + b) / 2.0
    return x, fun(x)


def bloch_norm(f: DirichletPolynomial, t_window: float = 30.0,
               t_resolution: int = 1 << 10, sigma_resolution: int = 256) -> NormEstimate:
    """``sup_sigma sigma |f'(sigma + it)|`` over the half-plane.

    With nonnegative coefficients the sup over t sits on the real axis, and
    the axis profile is maximized by a scan plus golden-section refinement;
    the result is then accurate to refinement tolerance.  Otherwise a
    (sigma, t) grid gives a lower bound.
    """
    ns, cs = f._arrays
    deriv = [(math.log(n), abs(c) * math.log(n)) for n, c in f.coeffs.items() if n > 1]
    if not deriv:
        return NormEstimate(0.0, math.inf, "bloch-axis")
    lam = np.array([l for l, _ in deriv])
    mag = np.array([m for _, m in deriv])
    hi = 1.0 / math.log(2.0)
    lo = 1e-3 / float(lam.max())
    sigmas = np.exp(np.linspace(math.log(lo), math.log(hi), sigma_resolution))

    if f.is_nonnegative():
        profile = sigmas * (np.exp(-np.outer(sigmas, lam)) @ mag)
        k = int(np.argmax(profile))
        a = sigmas[max(0, k - 1)]
        b = sigmas[min(len(sigmas) - 1, k + 1)]
        fun = lambda s: s * float(np.exp(-s * lam) @ mag)
        _, value = _golden_max(fun, a, b)
        return NormEstimate(float(value), math.inf, "bloch-axis", 0.0, sigma_resolution)

    fp = f.derivative()
    ts = np.linspace(-t_window, t_window, t_resolution)
    best = 0.0
    for s in sigmas:
        vals = np.abs(fp.eval_many(s + 1j * ts))
        best = max(best, float(s * vals.max()))
    return NormEstimate(best, math.inf, "bloch-grid", 0.0, sigma_resolution * t_resolution)


# --- BMOA via Carleson boxes --------------------------------------------------

def bmoa_carleson_norm(f: DirichletPolynomial, levels: int = 10,
                       t_window: tuple[float, float] = (0.0, 100.0),
                       offsets: int = 1000, nodes: int = 24) -> float:
    """Square root of the best Carleson box ratio for the measure |f'|^2 sigma.

    Boxes have side ``h = 2^0 .. 2^-levels`` and bottom-left corner sweeping
    ``offsets`` positions across ``t_window``; each box integral uses a
    tensor Gauss-Legendre rule with ``nodes`` points per axis, factorized so
    one matrix product covers every offset of a level.
    """
    fp = f.derivative()
    ns, cs = fp._arrays
    if len(ns) == 0:
        return 0.0
    lam = np.log(ns.astype(np.float64))
    t0, t1 = t_window
    t_offsets = np.linspace(t0, t1, offsets)
    u, w = np.polynomial.legendre.leggauss(nodes)
    u = 0.5 * (u + 1.0)  # nodes on [0, 1]
    w = 0.5 * w
    phase_offsets = np.exp(-1j * np.outer(t_offsets, lam))      # (O, T)
    best = 0.0
    for j in range(levels + 1):
        h = 2.0 ** (-j)
        sig = h * u
        decay = np.exp(-np.outer(sig, lam)) * cs[None, :]        # (A, T)
        wave = np.exp(-1j * h * np.outer(u, lam))                # (B, T)
        block = decay[:, None, :] * wave[None, :, :]             # (A, B, T)
        vals = block.reshape(nodes * nodes, -1) @ phase_offsets.T  # (A*B, O)
        weights = (h * np.outer(w * sig, w)).ravel()             # includes sigma factor
        box = weights @ (np.abs(vals) ** 2)
        best = max(best, float(box.max()))
    return math.sqrt(best)


# --- coefficient criteria -----------------------------------------------------

@dataclass(frozen=True)
class CriterionResult:
    """Exact supremum of a block-sum criterion over its scale parameter."""

    value: float
    argmax: float
    candidates: int


def _require_nonnegative(f: DirichletPolynomial, what: str):
    if not f.is_nonnegative():
        raise ValueError(f"{what} needs nonnegative real coefficients")


def _block_square_sum(ns, prefix, x: float, top: int) -> float:
    """Sum over k >= 1 of (sum of coefficients with x^k <= n < x^(k+1))^2."""
    total = 0.0
    k = 1
    low = x
    while low <= top:
        high = low * x
        i = np.searchsorted(ns, low, side="left")
        j = np.searchsorted(ns, high, side="left")
        if j > i:
            s = prefix[j] - prefix[i]
            total += s * s
        low = high
        k += 1
    return total


def fefferman_S(f: DirichletPolynomial) -> CriterionResult:
    """Exact sup over x >= e of the squared geometric-block sums (reported as its root).

    The block partition only changes at ``x = n^(1/k)``, so the sup is the
    max over those breakpoints' left limits, realized by evaluating at e and
    at midpoints of consecutive breakpoints.
    """
    _require_nonnegative(f, "the block criterion")
    items = [(n, c.real) for n, c in f.coeffs.items() if n >= 2]
    if not items:
        return CriterionResult(0.0, math.e, 0)
    items.sort()
    ns = np.array([n for n, _ in items], dtype=np.float64)
    prefix = np.concatenate([[0.0], np.cumsum([c for _, c in items])])
    top = int(ns[-1])
    points = {math.e}
    for n in ns:
        k = 1
        while n ** (1.0 / k) >= math.e:
            points.add(n ** (1.0 / k))
            k += 1
    cuts = sorted(p for p in points if p <= top + 1)
    candidates = [math.e] + [0.5 * (a + b) for a, b in zip(cuts, cuts[1:])]
    best, arg = -1.0, math.e
    for x in candidates:
        s2 = _block_square_sum(ns, prefix, x, top)
        if s2 > best:
            best, arg = s2, x
    return CriterionResult(math.sqrt(best), float(arg), len(candidates))


def bloch_criterion(f: DirichletPolynomial) -> CriterionResult:
    """Exact sup over x >= 2 of the single-window sums over ``x <= n < x^2``."""
    _require_nonnegative(f, "the window criterion")
    items = [(n, c.real) for n, c in f.coeffs.items() if n >= 2]
    if not items:
        return CriterionResult(0.0, 2.0, 0)
    items.sort()
    ns = np.array([n for n, _ in items], dtype=np.float64)
    prefix = np.concatenate([[0.0], np.cumsum([c for _, c in items])])
    points = {2.0}
    for n in ns:
        if n >= 2:
            points.add(float(n))
        if math.sqrt(n) >= 2:
            points.add(math.sqrt(n))
    cuts = sorted(points)
    candidates = cuts + [0.5 * (a + b) for a, b in zip(cuts, cuts[1:])]
    best, arg = -1.0, 2.0
    for x in candidates:
        i = np.searchsorted(ns, x, side="left")
        j = np.searchsorted(ns, x * x, side="left")
        s = prefix[j] - prefix[i]
        if s > best:
            best, arg = s, x
    return CriterionResult(float(best), float(arg), len(candidates))


def prime_bmoa_criterion(f: DirichletPolynomial) -> CriterionResult:
    """Block criterion applied to |a_p| for a prime-supported polynomial."""
    for n in f.coeffs:
        if n == 1:
            continue
        if bohr.big_omega(n) != 1:
            raise ValueError("prime criterion needs support on primes only")
    folded = DirichletPolynomial({n: abs(c) for n, c in f.coeffs.items() if n >= 2})
    return fefferman_S(folded)


# --- identity-at-2 sanity check for the square-function decomposition ---------

@dataclass(frozen=True)
class LPReport:
    estimate: float
    stderr: float
    tail: float
    exact: float
    samples: int

    def within(self, rel: float = 0.05) -> bool:
        scale = max(self.exact, 1e-300)
        return abs(self.estimate - self.exact) <= rel * scale


def littlewood_paley_check(f: DirichletPolynomial, samples: int = 100_000,
                           seed: int = 0, sigma_max: float = 4.0,
                           budget: int | None = None) -> LPReport:
    """Monte Carlo the weighted square integral that equals ``sum_{n>=2} |a_n|^2``.

    Characters are sampled as independent unimodular values at the primes,
    t against the Cauchy weight, and sigma with linear density up to
    ``sigma_max``; beyond that the character average is integrated in closed
    form and added as an exact tail term.
    """
    require_budget(samples, budget, "square-function sampling")
    items = [(n, c) for n, c in f.coeffs.items() if n >= 2]
    exact = float(sum(abs(c) ** 2 for _, c in items))
    if not items:
        return LPReport(0.0, 0.0, 0.0, 0.0, samples)
    ns = np.array([n for n, _ in items], dtype=np.int64)
    cs = np.array([c for _, c in items], dtype=np.complex128)
    lam = np.log(ns.astype(np.float64))
    deriv = cs * lam
    kappa, dims = _prime_exponent_matrix(ns)
    tail = float(np.sum(np.abs(cs) ** 2 * np.exp(-2.0 * sigma_max * lam)
                        * (2.0 * sigma_max * lam + 1.0)))
    total = 0.0
    total_sq = 0.0
    for chunk, count in rng.chunks(samples):
        gen = rng.generator(seed, rng.STREAM_LP, chunk)
        angles = gen.random((count, dims)) * 2.0 * np.pi
        sig = sigma_max * np.sqrt(gen.random(count))
        ts = np.tan(np.pi * (gen.random(count) - 0.5))
        phases = angles @ kappa.T                                  # (B, T)
        expo = -(sig[:, None] + 1j * ts[:, None]) * lam[None, :]
        vals = np.exp(1j * phases + expo) @ deriv
        draw = 2.0 * sigma_max ** 2 * np.abs(vals) ** 2
        total += float(draw.sum())
        total_sq += float((draw ** 2).sum())
    mean = total / samples
    var = max(total_sq / samples - mean ** 2, 0.0)
    stderr = math.sqrt(var / samples)
    return LPReport(mean + tail, stderr, tail, exact, samples)


def _prime_exponent_matrix(ns) -> tuple[np.ndarray, int]:
    """Rows of prime exponents for each frequency, over the primes that occur."""
    indices = [bohr.factorize(int(n)) for n in ns]
    dims = max((mi.max_position for mi in indices), default=1)
    dims = max(dims, 1)
    kappa = np.zeros((len(ns), dims), dtype=np.float64)
    for row, mi in enumerate(indices):
        for pos, exp in mi.entries:
            kappa[row, pos - 1] = exp
    return kappa, dims


# --- L^1 lower bound through divisor weights ----------------------------------

@dataclass(frozen=True)
class HelsonReport:
    lhs: NormEstimate
    rhs: float
    ok: bool


def helson_check(f: DirichletPolynomial, samples: int = 100_000, seed: int = 0,
                 budget: int | None = None) -> HelsonReport:
    """Check ``||f||_1 >= sqrt(sum |a_n|^2 / d(n))`` by sampling the Bohr lift.

    The left side is Monte Carlo with a standard error; ``ok`` allows three
    standard errors of slack, so a False is a genuine violation signal.
    """
    ns, cs = f._arrays
    rhs = 0.0
    for n, c in f.coeffs.items():
        rhs += abs(c) ** 2 / bohr.divisor_count(n)
    rhs = math.sqrt(rhs)
    lifted = bohr_lift(f)
    lhs = torus.norm(lifted, 1.0, "monte-carlo", samples=samples, seed=seed, budget=budget)
    return HelsonReport(lhs, rhs, lhs.value >= rhs - 3.0 * lhs.stderr)


# --- pointwise growth bound ---------------------------------------------------

POINTWISE_TAIL_CONSTANT = 3.0


@dataclass(frozen=True)
class PointwiseReport:
    worst_ratio: float
    argmax: tuple[float, float]
    coeff_ratio: float
    envelope_ok: bool
    coeff_ok: bool

    @property
    def ok(self) -> bool:
        return self.envelope_ok and self.coeff_ok


def pointwise_bound_check(f: DirichletPolynomial, levels: int = 12,
                          t_count: int = 33,
                          t_window: float = 20.0) -> PointwiseReport:
    """Check the two Bloch-norm consequences at individual points.

    ``|f(sigma+it) - a_1| <= (log+(1/sigma) + 3 * 2^-sigma) ||f||_B`` is
    tested on the dyadic grid ``sigma in {2^-j} union {1, 2, 4}`` with
    sampled t, and ``|a_n| <= e ||f||_B`` on every coefficient with n >= 2.
    """
    bn = bloch_norm(f).value
    a1 = complex(f.coeffs.get(1, 0.0))
    sigmas = sorted({2.0 ** (-j) for j in range(levels + 1)} | {1.0, 2.0, 4.0})
    ts = np.linspace(-t_window, t_window, t_count)
    worst = 0.0
    arg = (float(sigmas[0]), 0.0)
    for sig in sigmas:
        envelope = (max(0.0, math.log(1.0 / sig))
                    + POINTWISE_TAIL_CONSTANT * 2.0 ** (-sig)) * bn
        if envelope == 0.0:
            continue
        vals = np.abs(f.eval_many(sig + 1j * ts) - a1)
        ratio = float(vals.max()) / envelope
        if ratio > worst:
            worst = ratio
            arg = (float(sig), float(ts[int(np.argmax(vals))]))
    coeff_top = max((abs(c) for n, c in f.coeffs.items() if n >= 2), default=0.0)
    coeff_ratio = coeff_top / (math.e * bn) if bn > 0 else (0.0 if coeff_top == 0 else math.inf)
    return PointwiseReport(worst, arg, coeff_ratio,
                           worst <= 1.0 + 1e-9, coeff_ratio <= 1.0 + 1e-9)


# --- reference families -------------------------------------------------------

def log_reciprocal_family(length: int) -> DirichletPolynomial:
    """``sum_{2 <= n <= N} n^{-s} / (n log n)``, the shifted reciprocal-log series."""
    ns = np.arange(2, length + 1, dtype=np.float64)
    return DirichletPolynomial(dict(zip(range(2, length + 1), 1.0 / (ns * np.log(ns)))))


def prime_reciprocal_family(length: int) -> DirichletPolynomial:
    ps = bohr.primes_up_to(length)
    return DirichletPolynomial({int(p): 1.0 / float(p) for p in ps})


def double_exp_family(length: int) -> DirichletPolynomial:
    """One unit coefficient at ``floor(e^(e^k))`` for each ``k <= log log N``."""
    if length < 16:
        raise ValueError("length must be at least 16 (the first double-exponential)")
    kmax = int(math.floor(math.log(math.log(length))))
    coeffs = {}
    for k in range(1, kmax + 1):
        coeffs[int(math.floor(math.exp(math.exp(k))))] = 1.0
    return DirichletPolynomial(coeffs)


def prime_window_family(max_level: int, prime_cap: int = 10_000) -> DirichletPolynomial:
    """Weights ``e^(-2^j) 2^j`` on the primes in ``[e^(2^j), e^(2^j + 1)]``.

    Each full window carries total weight about ``e - 1``, and the windows
    align with geometric blocks, so block-square criteria grow linearly with
    the number of windows while single-window sums stay bounded.  Windows
    whose primes exceed ``prime_cap`` are dropped with a warning.
    """
    coeffs = {}
    for j in range(0, max_level + 1):
        lo = math.exp(2.0 ** j)
        hi = math.exp(2.0 ** j + 1.0)
        if lo > prime_cap:
            warnings.warn(
                f"window {j} starts beyond the prime cap {prime_cap}; dropping it",
                stacklevel=2)
            break
        weight = math.exp(-(2.0 ** j)) * 2.0 ** j
        for p in bohr.primes_up_to(int(min(hi, prime_cap))):
            if lo <= p <= hi:
                coeffs[int(p)] = weight
    return DirichletPolynomial(coeffs)


FAMILIES = {
    "log-reciprocal": log_reciprocal_family,
    "hilbert": log_reciprocal_family,
    "prime-reciprocal": prime_reciprocal_family,
    "double-exp": double_exp_family,
    "bloch-not-bmoa": prime_window_family,
}


def family(name: str, *args, **kwargs) -> DirichletPolynomial:
    try:
        builder = FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; choices: {sorted(FAMILIES)}") from None
    return builder(*args, **kwargs)
