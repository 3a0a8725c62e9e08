"""Structured-text (JSON) round trips for the package's data types.

Every writer sorts its records and keys, so saving the same object twice
produces byte-identical files; every reader reports the offending field on
malformed input instead of raising a bare KeyError.
"""

from __future__ import annotations

import json
from types import MappingProxyType

from . import bohr
from .dirichlet import DirichletPolynomial
from .polytope import AffineFunctional, LatticePolytope
from .torus import TorusPolynomial
from .transference import Certificate, CompletelyMultiplicative, TransferencePlan


class FormatError(ValueError):
    """Malformed structured-text input."""


def _need(record, key, where):
    if not isinstance(record, dict):
        raise FormatError(f"{where}: expected an object, got {type(record).__name__}")
    if key not in record:
        raise FormatError(f"{where}: missing field {key!r}")
    return record[key]


def _int(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError(f"{where}: expected an integer, got {value!r}")
    return value


def _real(value, where):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise FormatError(f"{where}: expected a number, got {value!r}")
    return float(value)


def _build(ctor, where, *args, **kwargs):
    # constructor validation (bad frequencies, unsorted primes, ...) counts
    # as malformed input when the data came from a file
    try:
        return ctor(*args, **kwargs)
    except ValueError as exc:
        raise FormatError(f"{where}: {exc}") from None


def _dump(obj, path):
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _load(path, kind):
    with open(path) as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: not valid {kind} text ({exc})") from None


# --- torus polynomials --------------------------------------------------------

def torus_to_dict(f: TorusPolynomial) -> dict:
    terms = [{"alpha": list(alpha), "re": float(c.real), "im": float(c.imag)}
             for alpha, c in sorted(f.terms.items())]
    return {"dims": f.dims, "terms": terms}


def torus_from_dict(data, where: str = "torus polynomial") -> TorusPolynomial:
    dims = _int(_need(data, "dims", where), f"{where}.dims")
    terms = {}
    records = _need(data, "terms", where)
    for i, rec in enumerate(records):
        ctx = f"{where}.terms[{i}]"
        alpha = _need(rec, "alpha", ctx)
        if not isinstance(alpha, list) or len(alpha) != dims:
            raise FormatError(f"{ctx}.alpha: expected an integer list of length {dims}")
        key = tuple(_int(a, f"{ctx}.alpha") for a in alpha)
        terms[key] = complex(_real(_need(rec, "re", ctx), f"{ctx}.re"),
                             _real(_need(rec, "im", ctx), f"{ctx}.im"))
    return _build(TorusPolynomial, where, dims, terms)


def save_torus(f: TorusPolynomial, path) -> None:
    _dump(torus_to_dict(f), path)


def load_torus(path) -> TorusPolynomial:
    return torus_from_dict(_load(path, "torus polynomial"), str(path))


# --- Dirichlet polynomials ----------------------------------------------------

def dirichlet_to_dict(f: DirichletPolynomial) -> dict:
    terms = [{"n": int(n), "re": float(c.real), "im": float(c.imag)}
             for n, c in sorted(f.coeffs.items())]
    return {"terms": terms}


def dirichlet_from_dict(data, where: str = "dirichlet polynomial") -> DirichletPolynomial:
    coeffs = {}
    for i, rec in enumerate(_need(data, "terms", where)):
        ctx = f"{where}.terms[{i}]"
        n = _int(_need(rec, "n", ctx), f"{ctx}.n")
        coeffs[n] = complex(_real(_need(rec, "re", ctx), f"{ctx}.re"),
                            _real(_need(rec, "im", ctx), f"{ctx}.im"))
    return _build(DirichletPolynomial, where, coeffs)


def save_dirichlet(f: DirichletPolynomial, path) -> None:
    _dump(dirichlet_to_dict(f), path)


def load_dirichlet(path) -> DirichletPolynomial:
    return dirichlet_from_dict(_load(path, "dirichlet polynomial"), str(path))


# --- lattice polytopes --------------------------------------------------------

def polytope_to_dict(poly: LatticePolytope) -> dict:
    return {
        "dims": poly.dims,
        "vertices": [list(v) for v in sorted(poly.vertices)],
        "facets": [{"beta": list(fa.beta), "b": int(fa.b)}
                   for fa in sorted(poly.facets, key=lambda fa: (fa.beta, fa.b))],
    }


def polytope_from_dict(data, where: str = "polytope") -> LatticePolytope:
    dims = _int(_need(data, "dims", where), f"{where}.dims")
    vertices = []
    for i, v in enumerate(_need(data, "vertices", where)):
        ctx = f"{where}.vertices[{i}]"
        if not isinstance(v, list) or len(v) != dims:
            raise FormatError(f"{ctx}: expected an integer list of length {dims}")
        vertices.append(tuple(_int(x, ctx) for x in v))
    facets = []
    for i, rec in enumerate(_need(data, "facets", where)):
        ctx = f"{where}.facets[{i}]"
        beta = _need(rec, "beta", ctx)
        if not isinstance(beta, list) or len(beta) != dims:
            raise FormatError(f"{ctx}.beta: expected an integer list of length {dims}")
        facets.append(AffineFunctional(tuple(_int(x, f"{ctx}.beta") for x in beta),
                                       _int(_need(rec, "b", ctx), f"{ctx}.b")))
    return _build(LatticePolytope, where, dims, tuple(vertices), tuple(facets))


def save_polytope(poly: LatticePolytope, path) -> None:
    _dump(polytope_to_dict(poly), path)


def load_polytope(path) -> LatticePolytope:
    return polytope_from_dict(_load(path, "polytope"), str(path))


# --- prime sets ---------------------------------------------------------------

def prime_set_to_dict(ps: bohr.PrimeSet) -> dict:
    if ps.all_primes:
        return {"primes": "all"}
    return {"primes": list(ps.primes)}


def prime_set_from_dict(data, where: str = "prime set") -> bohr.PrimeSet:
    primes = _need(data, "primes", where)
    if primes == "all":
        return bohr.PrimeSet(all_primes=True)
    if not isinstance(primes, list):
        raise FormatError(f"{where}.primes: expected \"all\" or an ascending integer list")
    return _build(bohr.PrimeSet, f"{where}.primes",
                  tuple(_int(p, f"{where}.primes") for p in primes))


# --- transference plans -------------------------------------------------------

def plan_to_dict(plan: TransferencePlan) -> dict:
    support = plan.g.support
    cert = plan.certificate
    return {
        "g": {"primes": list(support),
              "values": [plan.g.values[p] for p in support]},
        "x": plan.x,
        "Q": plan.Q,
        "m": {"primes": list(support),
              "values": [plan.m[p] for p in support]},
        "certificate": {
            "max_beta_below": cert.max_beta_below,
            "x_next": cert.x_next,
            "min_log": cert.min_log,
            "tail_lower_bound": cert.tail_lower_bound,
            "margin": cert.margin,
        },
    }


def _prime_table(data, where):
    primes = _need(data, "primes", where)
    values = _need(data, "values", where)
    if not isinstance(primes, list) or not isinstance(values, list) \
            or len(primes) != len(values):
        raise FormatError(f"{where}: primes and values must be lists of equal length")
    return primes, values


def plan_from_dict(data, where: str = "transference plan") -> TransferencePlan:
    gp, gv = _prime_table(_need(data, "g", where), f"{where}.g")
    g = _build(CompletelyMultiplicative, f"{where}.g",
               {_int(p, f"{where}.g.primes"): _real(v, f"{where}.g.values")
                for p, v in zip(gp, gv)})
    mp, mv = _prime_table(_need(data, "m", where), f"{where}.m")
    m = {_int(p, f"{where}.m.primes"): _int(v, f"{where}.m.values")
         for p, v in zip(mp, mv)}
    if set(m) != set(g.support):
        raise FormatError(f"{where}.m: table must cover exactly the support of g")
    cd = _need(data, "certificate", where)
    ctx = f"{where}.certificate"
    cert = Certificate(
        _int(_need(cd, "max_beta_below", ctx), f"{ctx}.max_beta_below"),
        _real(_need(cd, "x_next", ctx), f"{ctx}.x_next"),
        _real(_need(cd, "min_log", ctx), f"{ctx}.min_log"),
        _real(_need(cd, "tail_lower_bound", ctx), f"{ctx}.tail_lower_bound"),
        _real(_need(cd, "margin", ctx), f"{ctx}.margin"),
    )
    return TransferencePlan(
        g, _real(_need(data, "x", where), f"{where}.x"),
        _int(_need(data, "Q", where), f"{where}.Q"),
        MappingProxyType(m), cert)


def save_plan(plan: TransferencePlan, path) -> None:
    _dump(plan_to_dict(plan), path)


def load_plan(path) -> TransferencePlan:
    return plan_from_dict(_load(path, "transference plan"), str(path))
