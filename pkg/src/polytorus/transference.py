"""Transfer of partial-sum operators through completely multiplicative weights.

A weight ``g`` with ``g(p) > 1`` on a finite prime support rearranges
frequencies: rounding ``Q log g(p)`` to integers ``m_p`` sends ``n`` to the
degree ``beta(n) = sum alpha_p m_p``, and when ``Q`` is large enough the
frequencies with ``g(n) <= x`` are separated in degree from all the others.
The cut at ``x`` then agrees with a one-dimensional Fourier truncation, so
its H^q operator norm is controlled by the one-variable analytic projection
constant.  Plans carry an arithmetic certificate of that separation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType

import numpy as np

from . import bohr, rng
from .dirichlet import DirichletPolynomial, hinf_norm, hq_norm
from .torus import TorusPolynomial

Q_SEARCH_CAP = 1 << 40


@dataclass(frozen=True)
class CompletelyMultiplicative:
    """Completely multiplicative ``g`` given by its values on a finite prime support.

    Every value must exceed 1, which makes ``{n : g(n) <= x}`` finite and
    ``g(n) -> infinity`` along the support-smooth integers.
    """

    values: MappingProxyType

    def __init__(self, values):
        cleaned = {}
        for p, v in dict(values).items():
            p = int(p)
            bohr.prime_index(p)  # raises if composite
            v = float(v)
            if v <= 1.0:
                raise ValueError(f"g({p}) = {v} must exceed 1")
            cleaned[p] = v
        if not cleaned:
            raise ValueError("empty prime support")
        object.__setattr__(self, "values", MappingProxyType(cleaned))

    @classmethod
    def identity(cls, bound: int) -> "CompletelyMultiplicative":
        """``g(n) = n`` on the primes up to ``bound``."""
        return cls({int(p): float(p) for p in bohr.primes_up_to(bound)})

    @classmethod
    def power(cls, bound: int, exponent: float) -> "CompletelyMultiplicative":
        """``g(n) = n^exponent`` on the primes up to ``bound`` (exponent > 0)."""
        if exponent <= 0:
            raise ValueError("exponent must be positive")
        return cls({int(p): float(p) ** exponent for p in bohr.primes_up_to(bound)})

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self.values))

    def _exponents(self, n: int) -> list[tuple[int, int]]:
        if n < 1:
            raise ValueError("n must be >= 1")
        out = []
        rest = n
        for p in self.support:
            if rest == 1:
                break
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            if e:
                out.append((p, e))
        if rest != 1:
            raise ValueError(f"{n} has a prime factor outside the support")
        return out

    def g(self, n: int) -> float:
        out = 1.0
        for p, e in self._exponents(n):
            out *= self.values[p] ** e
        return out

    def log_g(self, n: int) -> float:
        return float(sum(e * math.log(self.values[p]) for p, e in self._exponents(n)))

    def is_smooth(self, n: int) -> bool:
        try:
            self._exponents(n)
            return True
        except ValueError:
            return False


def below_set(g: CompletelyMultiplicative, x: float) -> list[int]:
    """Ascending list of ``n`` with ``g(n) <= x`` (finite since every g(p) > 1)."""
    support = g.support
    out = []

    def extend(i: int, n: int, value: float):
        out.append(n)
        for j in range(i, len(support)):
            p = support[j]
            v = value * g.values[p]
            if v <= x:
                extend(j, n * p, v)

    if x >= 1.0:
        extend(0, 1, 1.0)
    return sorted(out)


@dataclass(frozen=True)
class Certificate:
    """Arithmetic witness that the cut is separated in twisted degree.

    ``tail_lower_bound = (Q - 1/(2c)) * log(x_next)`` lower-bounds
    ``beta(n)`` for every ``g(n) > x``; separation holds when it exceeds
    ``max_beta_below`` strictly, i.e. ``margin > 0``.
    """

    max_beta_below: int
    x_next: float
    min_log: float
    tail_lower_bound: float
    margin: float


@dataclass(frozen=True)
class TransferencePlan:
    g: CompletelyMultiplicative
    x: float
    Q: int
    m: MappingProxyType
    certificate: Certificate

    def beta(self, n: int) -> int:
        """Twisted degree ``sum alpha_p m_p`` of ``n``."""
        return sum(e * self.m[p] for p, e in self.g._exponents(n))

    @property
    def cutoff(self) -> int:
        return self.certificate.max_beta_below


def make_plan(g: CompletelyMultiplicative, x: float, Q: int,
              certify: bool = True) -> TransferencePlan:
    """Assemble the plan for a given ``Q``; with ``certify`` the margin must be positive.

    ``certify=False`` is for probing undersized plans (diagnostics and
    tests); the certificate is still computed and reported.
    """
    if x < 1.0:
        raise ValueError("x must be at least 1")
    if Q < 1:
        raise ValueError("Q must be a positive integer")
    m = {}
    for p in g.support:
        mp = round(Q * math.log(g.values[p]))
        if mp < 1:
            mp = 0  # marks an invalid rounding; certificate will fail
        m[p] = int(mp)
    plan = TransferencePlan(g, float(x), int(Q), MappingProxyType(m),
                            _certificate(g, x, Q, m))
    if certify and plan.certificate.margin <= 0.0:
        raise ValueError(
            f"Q = {Q} does not certify separation (margin {plan.certificate.margin:.3g})")
    return plan


def _certificate(g: CompletelyMultiplicative, x: float, Q: int, m) -> Certificate:
    support = g.support
    min_log = min(math.log(g.values[p]) for p in support)
    below = below_set(g, x)
    max_beta = 0
    for n in below:
        beta = sum(e * m[p] for p, e in g._exponents(n))
        max_beta = max(max_beta, beta)
    x_next = math.inf
    for n in below:
        gn = g.g(n)
        for p in support:
            v = gn * g.values[p]
            if v > x:
                x_next = min(x_next, v)
    if any(m[p] < 1 for p in support) or Q <= 1.0 / (2.0 * min_log):
        return Certificate(max_beta, x_next, min_log, -math.inf, -math.inf)
    bound = (Q - 1.0 / (2.0 * min_log)) * math.log(x_next)
    return Certificate(max_beta, x_next, min_log, bound, bound - max_beta)


def choose_Q(g: CompletelyMultiplicative, x: float) -> TransferencePlan:
    """Smallest certified ``Q`` found by doubling then bisection."""
    lo, hi = 0, 1
    while True:
        plan = make_plan(g, x, hi, certify=False)
        if plan.certificate.margin > 0.0:
            break
        lo = hi
        hi *= 2
        if hi > Q_SEARCH_CAP:
            raise ValueError(f"no certified Q up to {Q_SEARCH_CAP}")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        plan = make_plan(g, x, mid, certify=False)
        if plan.certificate.margin > 0.0:
            hi = mid
        else:
            lo = mid
    return make_plan(g, x, hi)


def verify_separation(plan: TransferencePlan, n_max: int) -> list[int]:
    """Support-smooth ``n <= n_max`` with ``g(n) > x`` but degree not above the cutoff.

    Empty for a certified plan; a nonempty return is a genuine counterexample
    to the claimed separation.
    """
    g = plan.g
    violations = []
    smooth = np.zeros(n_max + 1, dtype=bool)
    beta = np.zeros(n_max + 1, dtype=np.int64)
    logg = np.zeros(n_max + 1, dtype=np.float64)
    if n_max >= 1:
        smooth[1] = True
    for p in g.support:
        if p > n_max:
            continue
        base = np.flatnonzero(smooth)
        power = p
        step = 1
        while power <= n_max:
            src = base[base <= n_max // power]
            dst = src * power
            smooth[dst] = True
            beta[dst] = beta[src] + step * plan.m[p]
            logg[dst] = logg[src] + step * math.log(g.values[p])
            power *= p
            step += 1
    log_x = math.log(plan.x)
    for n in np.flatnonzero(smooth):
        if logg[n] > log_x + 1e-12 and beta[n] <= plan.cutoff:
            violations.append(int(n))
    return violations


def partial_sum(f: DirichletPolynomial, plan: TransferencePlan) -> DirichletPolynomial:
    """Keep the terms with ``g(n) <= x``; support must be plan-smooth."""
    kept = {}
    for n, c in f.coeffs.items():
        if plan.g.g(n) <= plan.x:
            kept[n] = c
    return DirichletPolynomial(kept)


def twist(f: DirichletPolynomial, plan: TransferencePlan) -> TorusPolynomial:
    """One-variable image ``sum a_n z^beta(n)`` (colliding degrees fold)."""
    terms: dict[tuple[int], complex] = {}
    for n, c in f.coeffs.items():
        key = (plan.beta(n),)
        terms[key] = terms.get(key, 0.0) + c
    return TorusPolynomial(1, terms)


@dataclass(frozen=True)
class ContractionReport:
    lhs: float
    rhs: float
    ratio: float
    bound: float
    ok: bool


def check_contraction(f: DirichletPolynomial, plan: TransferencePlan,
                      q: float = 4.0) -> ContractionReport:
    """Check ``||cut f||_q <= ||f||_q / sin(pi/q)`` with exact even norms."""
    if q not in (2.0, 4.0, 6.0):
        raise ValueError("contraction checks use the exact even norms, q in {2, 4, 6}")
    lhs = hq_norm(partial_sum(f, plan), q).value
    rhs = hq_norm(f, q).value
    bound = 1.0 / math.sin(math.pi / q)
    ratio = lhs / rhs if rhs > 0 else 0.0
    return ContractionReport(lhs, rhs, ratio, bound, ratio <= bound * (1 + 1e-12))


@dataclass(frozen=True)
class SmoothPartialReport:
    rows: list
    max_ratio: float
    reference: float
    constant: float


def smooth_partial_ratio(prime_set: bohr.PrimeSet, cut: int,
                         length: int | None = None, trials: int = 20,
                         seed: int = 0, t_window: float = 100.0,
                         resolution: int = 1 << 12) -> SmoothPartialReport:
    """Lower bounds for the sup-norm of truncation at ``cut`` on smooth polynomials.

    Random smooth-supported coefficients of length ``length`` (default
    ``cut**2``) are truncated at ``cut``; each trial contributes the sound
    ratio grid-lower(cut) / certified-upper(full).  The reference scale is
    ``pi0(cut) * log log cut`` and ``constant`` is the max ratio divided by
    it (reported, not asserted).
    """
    if length is None:
        length = cut * cut
    support = [n for n in bohr.smooth_numbers(prime_set, length) if n >= 2]
    if not support:
        raise ValueError("no smooth frequencies available")
    rows = []
    max_ratio = 0.0
    for trial in range(trials):
        gen = rng.generator(seed, rng.STREAM_TRIAL, trial)
        re = gen.standard_normal(len(support))
        im = gen.standard_normal(len(support))
        f = DirichletPolynomial(dict(zip(support, re + 1j * im)))
        cut_norm = hinf_norm(f.truncate(cut), t_window, resolution, certify=False).value
        full = hinf_norm(f, t_window, resolution, certify=True)
        ratio = cut_norm / full.upper if full.upper else 0.0
        rows.append((trial, cut_norm, full.upper, ratio))
        max_ratio = max(max_ratio, ratio)
    pi0 = prime_set.count_up_to(cut)
    loglog = math.log(math.log(cut)) if cut > math.e else 0.0
    reference = max(pi0 * loglog, 1e-12)
    return SmoothPartialReport(rows, max_ratio, reference, max_ratio / reference)
