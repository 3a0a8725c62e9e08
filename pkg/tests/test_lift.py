import math

import numpy as np
import pytest

from polytorus import lift, polytope, torus

from conftest import random_torus_poly


def random_functionals(rng, dims, count):
    funcs = []
    for _ in range(count):
        beta = tuple(int(b) for b in rng.integers(-3, 4, size=dims))
        funcs.append(polytope.AffineFunctional(beta, int(rng.integers(-5, 6))))
    return funcs


def test_lift_is_coefficient_reindexing(rng):
    f = random_torus_poly(rng, 1, 4, 5)
    funcs = random_functionals(rng, 1, 2)
    g = lift.build_lift(f, funcs)
    assert g.dims == 3
    assert sorted(np.abs(np.array(list(g.terms.values())))) == pytest.approx(
        sorted(np.abs(np.array(list(f.terms.values())))))
    for alpha, c in f.terms.items():
        target = alpha + tuple(sum(b * a for b, a in zip(fn.beta, alpha)) + fn.b
                               for fn in funcs)
        assert g.terms[target] == c


def test_isometry_p2_exact(rng):
    for _ in range(10):
        f = random_torus_poly(rng, 1, 4, int(rng.integers(2, 7)))
        g = lift.build_lift(f, random_functionals(rng, 1, 2))
        rep = lift.verify_isometry(f, g, 2.0, method="grid", resolution=32)
        assert rep.ok
        assert rep.difference < 1e-12


def test_isometry_p1_grid(rng):
    for _ in range(5):
        f = random_torus_poly(rng, 1, 4, int(rng.integers(2, 7)))
        g = lift.build_lift(f, random_functionals(rng, 1, 2))
        rep = lift.verify_isometry(f, g, 1.0, method="grid", resolution=64)
        assert rep.ok
        assert rep.difference < 1e-3


def test_isometry_p3_monte_carlo(rng):
    f = random_torus_poly(rng, 1, 3, 4)
    g = lift.build_lift(f, random_functionals(rng, 1, 2))
    rep = lift.verify_isometry(f, g, 3.0, method="monte-carlo", samples=40000)
    assert rep.ok
    assert rep.difference <= rep.tolerance


def test_anchor_one_plus_z_under_lift():
    # matched grids agree to machine precision, so the fine one-variable
    # value transports to the lifted polynomial
    f = torus.TorusPolynomial(1, {(0,): 1.0, (1,): 1.0})
    g = lift.build_lift(f, [polytope.AffineFunctional((1,), 1),
                            polytope.AffineFunctional((-1,), 2)])
    rep = lift.verify_isometry(f, g, 1.0, method="grid", resolution=256)
    assert rep.difference < 1e-12
    fine = torus.norm(f, 1, method="grid", resolution=1 << 13).value
    assert abs(fine - 4.0 / math.pi) + rep.difference < 1e-5


def test_polytope_lift_makes_exponents_nonnegative():
    f = torus.TorusPolynomial(1, {(-1,): 0.5, (0,): 1.0, (1,): 0.25})
    ball = polytope.ball_hull(1, 1)
    g, shifted, n = lift.lift_from_polytope(f, ball)
    assert n >= 1
    for alpha in g.terms:
        assert min(alpha) >= 0
    rep = lift.verify_isometry(f, g, 2.0, method="grid", resolution=64)
    assert rep.ok


def test_riesz_after_lift_equals_polytope_restriction(rng):
    # projecting the lifted polynomial onto the nonnegative orthant keeps
    # exactly the terms whose original exponent satisfies every facet bound
    f = torus.TorusPolynomial(1, {(-2,): 1.0, (-1,): 2.0, (0,): 1.0,
                                  (1,): -1.0, (2,): 0.5, (3,): 1.0})
    ball = polytope.ball_hull(1, 2)
    g, shifted, n = lift.lift_from_polytope(f, ball)
    pg = torus.riesz_project(g)
    kept = {alpha[0] - n for alpha in pg.terms}
    expected = {a[0] for a in f.terms if ball.contains(a)}
    assert kept == expected


def test_out_of_scope_functionals_still_isometric(rng):
    # negative lifted exponents are allowed: the map is an isometry either way
    f = random_torus_poly(rng, 2, 3, 5)
    funcs = random_functionals(rng, 2, 1)
    g = lift.build_lift(f, funcs)
    rep = lift.verify_isometry(f, g, 4.0, method="even-exact")
    assert rep.ok
    assert rep.difference < 1e-12
