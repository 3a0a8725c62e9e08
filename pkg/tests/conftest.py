import numpy as np
import pytest

from polytorus import dirichlet, torus


def random_torus_poly(rng, dims, degree, terms, analytic=False):
    """Sparse random polynomial with coefficients in the unit box.

    ``analytic`` restricts exponents to the simplex of total degree
    ``degree``; otherwise each coordinate ranges over [-degree, degree].
    """
    chosen = {}
    lo = 0 if analytic else -degree
    while len(chosen) < terms:
        alpha = tuple(int(a) for a in rng.integers(lo, degree + 1, size=dims))
        if analytic and sum(alpha) > degree:
            continue
        chosen[alpha] = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
    return torus.TorusPolynomial(dims, chosen)


def random_dirichlet(rng, n_max, terms=None, nonneg=False, start=1):
    """Random Dirichlet polynomial supported on [start, n_max]."""
    if terms is None:
        terms = max(2, n_max // 2)
    ns = rng.choice(np.arange(start, n_max + 1), size=min(terms, n_max - start + 1),
                    replace=False)
    coeffs = {}
    for n in ns:
        if nonneg:
            coeffs[int(n)] = float(rng.uniform(0, 1))
        else:
            coeffs[int(n)] = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
    return dirichlet.DirichletPolynomial(coeffs)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
