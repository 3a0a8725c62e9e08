"""Lattice polytopes with exact integer facet descriptions, dims 1..4.

Facet normals, membership tests and vertex recovery are all integer
arithmetic; floating point never decides a predicate.  Qhull only proposes
the combinatorial facet structure, after which every plane is rebuilt
exactly from its defining lattice points and certified against the full
point set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import ConvexHull, QhullError

MAX_DIMS = 4


@dataclass(frozen=True)
class AffineFunctional:
    """Integer affine map ``alpha -> <beta, alpha> + b``."""

    beta: tuple[int, ...]
    b: int

    def value(self, alpha) -> int:
        return sum(int(g) * int(a) for g, a in zip(self.beta, alpha)) + self.b

    def values(self, points: np.ndarray) -> np.ndarray:
        beta = np.array(self.beta, dtype=np.int64)
        return points.astype(np.int64) @ beta + self.b


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of integral points, carried in both V- and H-form.

    ``vertices`` are the extreme points; ``facets`` are primitive integer
    inner-pointing functionals, so ``alpha`` lies in the polytope exactly
    when every facet value is nonnegative.
    """

    dims: int
    vertices: tuple[tuple[int, ...], ...]
    facets: tuple[AffineFunctional, ...]

    def contains(self, alpha) -> bool:
        alpha = tuple(int(a) for a in alpha)
        if len(alpha) != self.dims:
            raise ValueError("dimension mismatch")
        return all(f.value(alpha) >= 0 for f in self.facets)

    def contains_many(self, points: np.ndarray) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(points, dtype=np.int64))
        ok = np.ones(pts.shape[0], dtype=bool)
        for f in self.facets:
            ok &= f.values(pts) >= 0
        return ok

    def lattice_points(self) -> list[tuple[int, ...]]:
        """All integral points of the polytope, from a bounding-box sweep."""
        verts = np.array(self.vertices, dtype=np.int64)
        lo, hi = verts.min(axis=0), verts.max(axis=0)
        axes = [np.arange(a, b + 1, dtype=np.int64) for a, b in zip(lo, hi)]
        mesh = np.meshgrid(*axes, indexing="ij")
        pts = np.stack([m.ravel() for m in mesh], axis=1)
        return [tuple(row) for row in pts[self.contains_many(pts)].tolist()]


def _int_det(matrix) -> int:
    """Determinant of a small integer matrix, exact (python ints)."""
    m = [list(map(int, row)) for row in matrix]
    size = len(m)
    if size == 0:
        return 1
    if size == 1:
        return m[0][0]
    if size == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    for j in range(size):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * _int_det(minor)
    return total


def _int_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    m = [list(map(int, r)) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                factor_i, factor_r = m[rank][col], m[i][col]
                m[i] = [factor_i * a - factor_r * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def _facet_from_simplex(simplex_points, all_points_sum, count) -> AffineFunctional | None:
    """Exact inner-pointing primitive facet through the given n points."""
    v0 = simplex_points[0]
    edges = [[p[j] - v0[j] for j in range(len(v0))] for p in simplex_points[1:]]
    n = len(v0)
    beta = []
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in edges]
        beta.append((-1) ** j * _int_det(minor))
    if all(g == 0 for g in beta):
        return None  # degenerate simplex, skip
    b = -sum(g * c for g, c in zip(beta, v0))
    # orient toward the centroid of the full point set (strictly interior)
    side = sum(g * s for g, s in zip(beta, all_points_sum)) + count * b
    if side < 0:
        beta = [-g for g in beta]
        b = -b
    elif side == 0:
        return None
    g = 0
    for x in beta + [b]:
        g = math.gcd(g, abs(x))
    return AffineFunctional(tuple(x // g for x in beta), b // g)


def hull_of_points(points) -> LatticePolytope:
    """Exact convex hull of integral points (full-dimensional, dims <= 4)."""
    pts = [tuple(int(a) for a in p) for p in points]
    if not pts:
        raise ValueError("empty point set")
    dims = len(pts[0])
    if not 1 <= dims <= MAX_DIMS:
        raise ValueError(f"dims must be in 1..{MAX_DIMS}")
    if any(len(p) != dims for p in pts):
        raise ValueError("inconsistent point dimensions")
    pts = sorted(set(pts))

    if dims == 1:
        lo = min(p[0] for p in pts)
        hi = max(p[0] for p in pts)
        vertices = ((lo,),) if lo == hi else ((lo,), (hi,))
        facets = (AffineFunctional((1,), -lo), AffineFunctional((-1,), hi))
        return LatticePolytope(1, vertices, facets)

    arr = np.array(pts, dtype=np.float64)
    try:
        qhull = ConvexHull(arr, qhull_options="Qt")
    except QhullError as exc:
        raise ValueError("degenerate point set: not full-dimensional") from exc

    total = [sum(p[j] for p in pts) for j in range(dims)]
    count = len(pts)
    facets = set()
    for simplex in qhull.simplices:
        facet = _facet_from_simplex([pts[i] for i in simplex], total, count)
        if facet is not None:
            facets.add(facet)

    pts_arr = np.array(pts, dtype=np.int64)
    for facet in facets:
        vals = facet.values(pts_arr)
        if vals.min() < 0:
            raise ValueError("facet certification failed; input too ill-conditioned")

    # a point is a vertex exactly when its tight facet normals span the space
    vertices = []
    for p in pts:
        tight = [f.beta for f in facets if f.value(p) == 0]
        if len(tight) >= dims and _int_rank(tight) == dims:
            vertices.append(p)
    ordered_facets = tuple(sorted(facets, key=lambda f: (f.beta, f.b)))
    return LatticePolytope(dims, tuple(sorted(vertices)), ordered_facets)


def ball_hull(dims: int, radius: float) -> LatticePolytope:
    """Hull of the lattice points with Euclidean norm at most ``radius``."""
    if not 1 <= dims <= MAX_DIMS:
        raise ValueError(f"dims must be in 1..{MAX_DIMS}")
    if radius < 1 and dims > 1:
        raise ValueError("radius must be >= 1 for a full-dimensional ball hull")
    half = int(math.floor(radius))
    axes = np.arange(-half, half + 1, dtype=np.int64)
    mesh = np.meshgrid(*([axes] * dims), indexing="ij")
    pts = np.stack([m.ravel() for m in mesh], axis=1)
    inside = (pts ** 2).sum(axis=1) <= int(radius ** 2 + 1e-9)
    return hull_of_points([tuple(r) for r in pts[inside].tolist()])


def translate_positive(polytope: LatticePolytope, at_least: int = 0):
    """Shift by ``N * (1,..,1)`` into the nonnegative orthant.

    ``N`` is the smallest shift at least ``at_least`` making every vertex
    coordinate nonnegative.  Facets move by ``b -> b - N * sum(beta)``.
    Returns ``(shifted_polytope, N)``.
    """
    low = min(c for v in polytope.vertices for c in v)
    shift = max(at_least, -low if low < 0 else 0)
    vertices = tuple(tuple(c + shift for c in v) for v in polytope.vertices)
    facets = tuple(
        AffineFunctional(f.beta, f.b - shift * sum(f.beta)) for f in polytope.facets
    )
    return LatticePolytope(polytope.dims, vertices, facets), shift
