import math

import numpy as np
import pytest
from scipy.integrate import quad

from polytorus import bohr, dirichlet, randomseries


def quad_weight_oracle(prime_set, n):
    # the prime counter jumps at every prime and the integrand decays like
    # log log x/(x log^3 x), so integrate piecewise between jumps and move
    # the unbounded tail to u = log x where the density is count*log(u)/u^3
    cut = 10.0 ** 6
    edges = [float(n)] + [float(p) for p in prime_set.primes if n < p < cut] + [cut]
    total = 0.0
    for lo, hi in zip(edges, edges[1:]):
        count = prime_set.count_up_to(0.5 * (lo + hi))
        piece, _ = quad(lambda x: math.log(math.log(x)) / (x * math.log(x) ** 3),
                        lo, hi, limit=200)
        total += count * piece
    tail, _ = quad(lambda u: math.log(u) / u ** 3, math.log(cut), np.inf, limit=200)
    return total + prime_set.count_up_to(cut) * tail


def test_ultra_thin_weight_matches_quadrature():
    ps = bohr.PrimeSet((2, 3))
    for n in (3, 10, 50):
        assert randomseries.ultra_thin_weight(ps, n) == pytest.approx(
            quad_weight_oracle(ps, n), abs=1e-10)
    ps5 = bohr.PrimeSet((2, 3, 5, 7, 11))
    assert randomseries.ultra_thin_weight(ps5, 4) == pytest.approx(
        quad_weight_oracle(ps5, 4), abs=1e-10)


def test_ultra_thin_weight_frozen_values():
    ps = bohr.PrimeSet((2, 3))
    assert randomseries.ultra_thin_weight(ps, 1) == 1.0
    assert randomseries.ultra_thin_weight(ps, 2) == 1.0
    assert randomseries.ultra_thin_weight(ps, 3) == pytest.approx(
        0.4921896839919018, abs=1e-12)
    assert randomseries.ultra_thin_weight(ps, 10) == pytest.approx(
        0.25161412336676986, abs=1e-12)


def test_ultra_thin_weight_monotone():
    ps = bohr.PrimeSet((2, 3, 5))
    vals = [randomseries.ultra_thin_weight(ps, n) for n in range(3, 40)]
    assert all(a >= b for a, b in zip(vals, vals[1:]))


def test_ultra_thin_rejects_full_prime_set():
    with pytest.raises(ValueError):
        randomseries.ultra_thin_weight(bohr.PrimeSet(all_primes=True), 3)


def test_weights_cache_consistent():
    ps = bohr.PrimeSet((2, 3))
    table = randomseries.UltraThinWeights(ps)
    for n in (2, 3, 8, 27):
        assert table.weight(n) == randomseries.ultra_thin_weight(ps, n)


def test_rademacher_sample_properties():
    f = dirichlet.log_reciprocal_family(30)
    g = randomseries.rademacher_sample(f, seed=4, trial=2)
    assert set(g.coeffs) == set(f.coeffs)
    for n in f.coeffs:
        assert abs(g.coeffs[n]) == pytest.approx(abs(f.coeffs[n]), abs=1e-15)
        assert g.coeffs[n] / f.coeffs[n] in (1.0, -1.0)
    assert randomseries.rademacher_sample(f, seed=4, trial=2).coeffs == g.coeffs
    assert randomseries.rademacher_sample(f, seed=4, trial=3).coeffs != g.coeffs


def test_sampling_commutes_with_truncation():
    f = dirichlet.log_reciprocal_family(60)
    for sampler in (randomseries.rademacher_sample, randomseries.steinhaus_sample):
        whole = sampler(f, seed=9, trial=1).truncate(30)
        part = sampler(f.truncate(30), seed=9, trial=1)
        assert whole.coeffs == part.coeffs


def test_steinhaus_sample_unimodular():
    f = dirichlet.log_reciprocal_family(20)
    g = randomseries.steinhaus_sample(f, seed=1)
    for n in f.coeffs:
        assert abs(abs(g.coeffs[n]) - abs(f.coeffs[n])) < 1e-14


def test_single_term_energy_closed_form_vs_quadrature():
    for n in (2, 5, 100):
        ln = math.log(n)
        oracle, _ = quad(lambda s: s * ln * ln * n ** (-2 * s), 0.0, 1.0)
        assert randomseries.single_term_energy(n) == pytest.approx(oracle, abs=1e-12)


def test_estimate_x_single_term_anchor():
    f = dirichlet.DirichletPolynomial({5: 1.0})
    est = randomseries.estimate_X(f)
    exact = randomseries.single_term_energy(5)
    assert est.lower == pytest.approx(exact, abs=1e-6)
    assert est.lower <= est.upper
    # the upper estimate carries a Lipschitz safety margin on top of the
    # grid supremum, so it is only required to bracket from above
    assert est.upper >= exact - 1e-12
    assert est.upper - est.lower < 0.1 * exact


def test_estimate_x_scales_quadratically():
    f = dirichlet.DirichletPolynomial({3: 1.0, 7: 0.5})
    one = randomseries.estimate_X(f)
    two = randomseries.estimate_X(f.scale(2.0))
    assert two.lower == pytest.approx(4.0 * one.lower, rel=1e-9)


def test_kahane_experiment_shape_and_bound_formula():
    rows = randomseries.kahane_experiment((5, 10), trials=4, seed=0,
                                          t_window=50.0, resolution=1 << 10)
    assert [r.prime_count for r in rows] == [5, 10]
    assert rows[0].largest_prime == 11
    assert rows[1].largest_prime == 29
    for r in rows:
        # the sampled family carries unit coefficients, so its l2 norm is
        # sqrt(K) and the comparison line works out to K*sqrt(log log p_K)
        l2 = math.sqrt(r.prime_count)
        expect = l2 * math.sqrt(r.prime_count * math.log(math.log(r.largest_prime)))
        assert r.bound == pytest.approx(expect, rel=1e-12)
        assert r.ratio == pytest.approx(r.mean_sup / r.bound, rel=1e-12)
        assert r.mean_sup > 0


def test_bmoa_random_experiment_smoke():
    rep = randomseries.bmoa_random_experiment(truncations=(8, 16), trials=2,
                                              t_resolution=1 << 8)
    assert rep.converged
    assert rep.weighted_sum > 0
    assert rep.weighted_tail < 1e-3 * rep.weighted_sum
    assert len(rep.rows) == 2
    for n, lo, up in rep.rows:
        assert n in (8, 16)
        assert 0.0 <= lo <= up
