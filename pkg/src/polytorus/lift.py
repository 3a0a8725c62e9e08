"""Norm-preserving lifts of torus polynomials along affine functionals.

Appending the coordinates ``eta_j = prod z_i^(beta_i) * const`` driven by
integer affine functionals leaves every L^p norm unchanged: substituting the
new variables and integrating them out reduces to rotation invariance of
Haar measure.  When the functionals are the facets of a lattice polytope E,
the one-sided projection of the lift picks out exactly the terms of f whose
exponents lie in E, which converts polytope truncations into half-space
projections in more variables.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import torus
from .polytope import AffineFunctional, LatticePolytope, translate_positive
from .torus import NormEstimate, TorusPolynomial


def build_lift(f: TorusPolynomial, functionals) -> TorusPolynomial:
    """Lift ``f`` to ``dims + len(functionals)`` variables.

    The term with exponent ``alpha`` moves to exponent
    ``(alpha, phi_1(alpha), .., phi_m(alpha))`` with the same coefficient.
    The first block keeps the map injective, so the coefficient multiset
    (hence the H^2 norm) is preserved on the nose.
    """
    functionals = tuple(functionals)
    for phi in functionals:
        if len(phi.beta) != f.dims:
            raise ValueError("functional arity does not match polynomial dims")
    new_terms = {}
    for alpha, c in f.terms.items():
        extra = tuple(phi.value(alpha) for phi in functionals)
        new_terms[alpha + extra] = c
    return TorusPolynomial(f.dims + len(functionals), new_terms)


def lift_from_polytope(f: TorusPolynomial, polytope: LatticePolytope):
    """Lift ``f`` so that the polytope truncation becomes a one-sided projection.

    ``f`` and ``polytope`` are first translated together into the positive
    cone by the smallest joint shift ``N``; the lift then appends one
    coordinate per facet of the shifted polytope.  Returns
    ``(g, shifted_polytope, N)`` with ``g`` in ``f.dims + #facets``
    variables, and the guarantee that keeping the terms of ``g`` with all
    exponents nonnegative is the same as keeping the terms of ``f`` with
    exponent in the polytope.
    """
    if polytope.dims != f.dims:
        raise ValueError("polytope dims must match polynomial dims")
    alpha, _ = f._arrays
    low_f = int(alpha.min()) if alpha.shape[0] else 0
    shifted, shift = translate_positive(polytope, at_least=max(0, -low_f))
    shifted_f = TorusPolynomial(
        f.dims, {tuple(a + shift for a in al): c for al, c in f.terms.items()}
    )
    return build_lift(shifted_f, shifted.facets), shifted, shift


@dataclass(frozen=True)
class IsometryReport:
    norm_f: NormEstimate
    norm_g: NormEstimate
    difference: float
    tolerance: float
    ok: bool


def verify_isometry(f: TorusPolynomial, g: TorusPolynomial, p: float,
                    method: str = "grid", resolution: int | None = None,
                    samples: int = 100_000, seed: int = 0,
                    budget: int | None = None,
                    tolerance: float | None = None) -> IsometryReport:
    """Compare ``||f||_p`` with ``||g||_p`` by independent quadratures.

    Default tolerances: exact coefficient paths 1e-12, grids 1e-3, Monte
    Carlo three combined standard errors.
    """
    est_f = torus.norm(f, p, method, resolution=resolution, samples=samples,
                       seed=seed, budget=budget)
    est_g = torus.norm(g, p, method, resolution=resolution, samples=samples,
                       seed=seed + 1, budget=budget)
    diff = abs(est_f.value - est_g.value)
    if tolerance is None:
        if method == "even-exact":
            tolerance = 1e-12 * max(1.0, est_f.value)
        elif method == "grid":
            tolerance = 1e-3 * max(1.0, est_f.value)
        else:
            tolerance = 3.0 * float(np.hypot(est_f.stderr, est_g.stderr))
    return IsometryReport(est_f, est_g, diff, tolerance, diff <= tolerance)
