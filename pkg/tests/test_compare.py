import math

import numpy as np
import pytest

from polytorus import compare, dirichlet

from conftest import random_dirichlet


def test_streamed_sup_matches_materialized():
    row = compare.ratio_table("log-reciprocal", lengths=(200,))[0]
    f = dirichlet.log_reciprocal_family(200)
    direct = sum(abs(c) for c in f.coeffs.values())
    assert row.sup == pytest.approx(direct, rel=1e-12)
    assert row.terms == len(f.coeffs)
    assert row.loglog == pytest.approx(math.log(math.log(200.0)))


def test_streamed_bloch_matches_direct_scan():
    row = compare.ratio_table("log-reciprocal", lengths=(500,))[0]
    f = dirichlet.log_reciprocal_family(500)
    ns = np.array(sorted(f.coeffs), dtype=float)
    cs = np.array([f.coeffs[int(n)].real for n in ns])
    lam = np.log(ns)
    sigmas = np.linspace(1e-5, 2.0, 1 << 14)
    vals = (np.exp(-np.outer(sigmas, lam)) @ (cs * lam)) * sigmas
    assert row.bloch == pytest.approx(float(vals.max()), rel=1e-4)


def test_hilbert_alias_and_prime_family():
    a = compare.ratio_table("hilbert", lengths=(300,))[0]
    b = compare.ratio_table("log-reciprocal", lengths=(300,))[0]
    assert a.sup == b.sup and a.bloch == b.bloch

    p = compare.ratio_table("prime-reciprocal", lengths=(100,))[0]
    from polytorus import bohr
    assert p.sup == pytest.approx(bohr.prime_reciprocal_sum(100), rel=1e-12)
    assert p.terms == 25


def test_double_exp_rows():
    rows = compare.ratio_table("double-exp", lengths=(100, 10 ** 5))
    assert rows[0].terms == 1
    assert rows[1].terms == 2
    assert rows[1].bmoa > 0
    assert rows[1].sup == pytest.approx(2.0, rel=1e-12)


def test_bmoa_skipped_above_cap():
    row = compare.ratio_table("log-reciprocal", lengths=(10 ** 5,), bmoa_cap=1000)[0]
    assert math.isnan(row.bmoa)
    assert row.sup > 0


def test_ratio_growth_fit():
    rows = compare.ratio_table("log-reciprocal", lengths=(10 ** 3, 10 ** 4))
    slope, intercept = compare.ratio_growth(rows)
    assert np.isfinite(slope) and np.isfinite(intercept)


def test_bernstein_single_term_equality():
    f = dirichlet.DirichletPolynomial({50: 1.0})
    rep = compare.bernstein_check(f)
    assert rep.derivative_sup == pytest.approx(math.log(50.0), abs=1e-12)
    assert rep.ok_sup and rep.ok_bloch


def test_bernstein_rejects_constant_poly():
    with pytest.raises(ValueError):
        compare.bernstein_check(dirichlet.DirichletPolynomial({1: 3.0}))


def test_bernstein_random_suite(rng):
    for _ in range(10):
        f = random_dirichlet(rng, 50)
        rep = compare.bernstein_check(f, resolution=1 << 12)
        assert rep.ok_sup and rep.ok_bloch


def test_shift_single_term_anchor():
    f = dirichlet.DirichletPolynomial({50: 1.0})
    rep = compare.shift_check(f, c=0.5, resolution=1 << 16)
    assert rep.sup == pytest.approx(1.0, abs=1e-12)
    # shifting by c/log 50 scales the term by e^{-1/2}; the bound is that over
    # 1-c, padded by the certificate slack of the shifted sup
    assert rep.bound >= 2.0 * math.exp(-0.5) - 1e-12
    assert rep.bound == pytest.approx(2.0 * math.exp(-0.5), rel=1e-2)
    assert rep.ok


def test_shift_random_suite(rng):
    for c in (0.25, 0.5, 0.75):
        for _ in range(5):
            f = random_dirichlet(rng, 50)
            rep = compare.shift_check(f, c=c, resolution=1 << 12)
            assert rep.ok


def test_shift_rejects_bad_c():
    f = dirichlet.DirichletPolynomial({2: 1.0})
    with pytest.raises(ValueError):
        compare.shift_check(f, c=0.0)
    with pytest.raises(ValueError):
        compare.shift_check(f, c=1.0)
