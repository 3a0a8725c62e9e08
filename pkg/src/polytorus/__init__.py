"""Polynomials on the polytorus and the Dirichlet series they lift.

The modules split along the objects they own: :mod:`polytorus.torus` for
trigonometric polynomials and their norms, :mod:`polytorus.polytope` for
exact lattice polytopes, :mod:`polytorus.lift` for the norm-preserving
change of variables between them, :mod:`polytorus.dirichlet` for Dirichlet
polynomials and their half-plane norms, :mod:`polytorus.transference` for
certified frequency separation, :mod:`polytorus.randomseries` for random
signs, and :mod:`polytorus.compare` for the cross-norm experiment tables.
"""

from .bohr import MultiIndex, PrimeSet, factorize, primes_up_to, smooth_numbers
from .budget import DEFAULT_POINT_BUDGET, BudgetExceededError
from .compare import bernstein_check, ratio_table, shift_check
from .dirichlet import (DirichletPolynomial, bloch_criterion, bloch_norm,
                        bmoa_carleson_norm, bohr_lift, family, fefferman_S,
                        helson_check, hinf_norm, hq_norm,
                        littlewood_paley_check, pointwise_bound_check)
from .kernels import backend_name
from .lift import build_lift, lift_from_polytope, verify_isometry
from .polytope import (AffineFunctional, LatticePolytope, ball_hull,
                       hull_of_points, translate_positive)
from .randomseries import (UltraThinWeights, estimate_X, kahane_experiment,
                           rademacher_sample, ultra_thin_weight)
from .torus import (NormEstimate, TorusPolynomial, dirichlet_kernel,
                    grid_values, kernel_scaling_experiment, multiplier_project,
                    multivar_sup_check, norm, projection_ratio_search,
                    refor_experiment, riesz_project)
from .transference import (CompletelyMultiplicative, TransferencePlan,
                           check_contraction, choose_Q, make_plan,
                           partial_sum, verify_separation)

__version__ = "0.1.0"

__all__ = [
    "AffineFunctional", "BudgetExceededError", "CompletelyMultiplicative",
    "DEFAULT_POINT_BUDGET", "DirichletPolynomial", "LatticePolytope",
    "MultiIndex", "NormEstimate", "PrimeSet", "TorusPolynomial",
    "TransferencePlan", "UltraThinWeights", "backend_name", "ball_hull",
    "bernstein_check", "bloch_criterion", "bloch_norm", "bmoa_carleson_norm",
    "bohr_lift", "build_lift", "check_contraction", "choose_Q",
    "dirichlet_kernel", "estimate_X", "factorize", "family", "fefferman_S",
    "grid_values", "helson_check", "hinf_norm", "hq_norm",
    "hull_of_points", "kahane_experiment", "kernel_scaling_experiment",
    "lift_from_polytope", "littlewood_paley_check", "make_plan",
    "multiplier_project", "multivar_sup_check", "norm", "partial_sum",
    "pointwise_bound_check", "primes_up_to", "projection_ratio_search",
    "rademacher_sample", "ratio_table", "refor_experiment", "riesz_project",
    "shift_check", "smooth_numbers", "translate_positive",
    "ultra_thin_weight", "verify_isometry", "verify_separation",
]
