import math

import numpy as np
import pytest

from polytorus import BudgetExceededError, torus
from polytorus.kernels import backend_name

from conftest import random_torus_poly

D11_L1 = 1.0 / 3.0 + 2.0 * math.sqrt(3.0) / math.pi


def test_eval_matches_brute_force(rng):
    f = random_torus_poly(rng, 2, 3, 6)
    theta = rng.uniform(-math.pi, math.pi, size=2)
    brute = sum(c * np.exp(1j * np.dot(a, theta)) for a, c in f.terms.items())
    assert abs(f.eval(theta) - brute) < 1e-12
    pts = rng.uniform(-math.pi, math.pi, size=(7, 2))
    many = f.eval_many(pts)
    assert np.max(np.abs(many - [f.eval(p) for p in pts])) < 1e-12


def test_parseval_on_random_sparse(rng):
    for _ in range(30):
        dims = int(rng.integers(1, 4))
        f = random_torus_poly(rng, dims, 8, int(rng.integers(1, 9)))
        exact = math.sqrt(sum(abs(c) ** 2 for c in f.terms.values()))
        got = torus.norm(f, 2, method="grid", resolution=32).value
        assert abs(got - exact) < 1e-12


def test_l1_anchor_one_plus_z():
    f = torus.TorusPolynomial(1, {(0,): 1.0, (1,): 1.0})
    got = torus.norm(f, 1, method="grid", resolution=1 << 14).value
    assert abs(got - 4.0 / math.pi) < 1e-8


def test_fourth_moment_two_dims_exact():
    # E|z1 + z2|^4 = 6 by expanding the square's coefficients
    f = torus.TorusPolynomial(2, {(1, 0): 1.0, (0, 1): 1.0})
    est = torus.norm(f, 4, method="even-exact")
    assert est.value == pytest.approx(6.0 ** 0.25, abs=1e-14)
    grid = torus.norm(f, 4, method="grid", resolution=16).value
    assert abs(grid - est.value) < 1e-12


def test_even_exact_matches_monte_carlo(rng):
    f = random_torus_poly(rng, 2, 3, 5)
    exact = torus.norm(f, 4, method="even-exact")
    mc = torus.norm(f, 4, method="monte-carlo", samples=20000, seed=5)
    assert abs(mc.value - exact.value) <= 3.0 * mc.stderr


def test_dirichlet_kernel_counts_and_coeffs():
    k11 = torus.dirichlet_kernel(1.0, 1)
    assert sorted(k11.terms) == [(-1,), (0,), (1,)]
    assert all(c == 1.0 for c in k11.terms.values())
    assert len(torus.dirichlet_kernel(1.0, 2).terms) == 5
    assert len(torus.dirichlet_kernel(2.0, 2).terms) == 13


def test_dirichlet_kernel_l1_anchor():
    f = torus.dirichlet_kernel(1.0, 1)
    got = torus.norm(f, 1, method="grid", resolution=1 << 14).value
    assert abs(got - D11_L1) < 1e-6


def test_norm_monotone_in_p(rng):
    f = random_torus_poly(rng, 2, 4, 6)
    vals = [torus.norm(f, p, method="grid", resolution=64).value
            for p in (1.0, 2.0, 4.0)]
    assert vals[0] <= vals[1] + 1e-12 <= vals[2] + 2e-12


def test_sup_norm_certificate_brackets_grid_refinement(rng):
    f = random_torus_poly(rng, 1, 6, 5)
    coarse = torus.norm(f, math.inf, method="grid", resolution=256, certify=True)
    fine = torus.norm(f, math.inf, method="grid", resolution=1 << 13).value
    assert coarse.value <= fine <= coarse.upper + 1e-12


def test_riesz_projection_keeps_nonnegative_orthant(rng):
    f = random_torus_poly(rng, 2, 3, 8)
    pf = torus.riesz_project(f)
    assert set(pf.terms) == {a for a in f.terms if min(a) >= 0}
    again = torus.riesz_project(pf)
    assert again.terms == pf.terms


def test_multiplier_project_subsets(rng):
    f = random_torus_poly(rng, 1, 5, 6)
    keep = set(list(f.terms)[:3])
    g = torus.multiplier_project(f, lambda a: a in keep)
    assert set(g.terms) == keep
    assert all(g.terms[a] == f.terms[a] for a in keep)


def test_multiplier_project_accepts_polytope(rng):
    from polytorus import polytope
    f = random_torus_poly(rng, 2, 4, 8)
    ball = polytope.ball_hull(2, 2)
    g = torus.multiplier_project(f, ball)
    assert set(g.terms) == {a for a in f.terms if ball.contains(a)}


def test_hollenbeck_verbitsky_grid(rng):
    for _ in range(30):
        f = random_torus_poly(rng, 1, 16, int(rng.integers(2, 12)))
        pf = torus.riesz_project(f)
        for p in (4.0 / 3.0, 2.0, 4.0):
            bound = 1.0 / math.sin(math.pi / p)
            nf = torus.norm(f, p, method="grid", resolution=4096).value
            npf = torus.norm(pf, p, method="grid", resolution=4096).value
            assert npf <= (1.0 + 1e-6) * bound * nf


def test_kernel_scaling_slope_one_dim():
    rows, slope = torus.kernel_scaling_experiment(1, (4, 8, 16, 32))
    # one-dimensional Lebesgue constants grow like log R: slope near zero
    assert len(rows) == 4
    assert slope < 0.35


def test_refor_rejects_small_dims():
    with pytest.raises(ValueError):
        torus.refor_experiment(1.5, 3, (4, 8))
    with pytest.raises(ValueError):
        torus.refor_experiment(2.5, 2, (4, 8))


def test_backend_agreement():
    import polytorus._kernels_py as py_impl
    if backend_name() != "compiled":
        pytest.skip("compiled backend unavailable")
    import polytorus._ext as ext
    rng = np.random.default_rng(1)
    alpha = rng.integers(-5, 6, size=(7, 2)).astype(np.int64)
    cre = rng.uniform(-1, 1, 7)
    cim = rng.uniform(-1, 1, 7)
    theta = rng.uniform(-math.pi, math.pi, size=(64, 2))
    a = py_impl.eval_trig(alpha, cre, cim, theta)
    b = ext.eval_trig(alpha, cre, cim, theta)
    assert np.max(np.abs(np.asarray(a) - np.asarray(b))) < 1e-9


def test_budget_guard():
    f = torus.TorusPolynomial(2, {(1, 0): 1.0})
    with pytest.raises(BudgetExceededError):
        torus.norm(f, 2, method="grid", resolution=64, budget=10)
    with pytest.raises(BudgetExceededError):
        torus.norm(f, 3, method="monte-carlo", samples=10 ** 6, budget=100)


def test_projection_search_stays_below_bound():
    best, poly = torus.projection_ratio_search(4.0, starts=2, iterations=30,
                                               resolution=64, seed=1)
    assert 0.0 < best <= math.sqrt(2.0) * (1.0 + 1e-9)
    assert poly.dims == 1


def test_multivar_sup_check_smoke(rng):
    f = random_torus_poly(rng, 2, 4, 6, analytic=True)
    sup, small, bound, ok = torus.multivar_sup_check(f, 4)
    assert ok
    assert sup <= bound + 1e-9
    assert small > 0.0
