"""Exact convex hulls of integer point sets.

Points are plain tuples of Python ints (``LatticePoint``) or of
``Fraction`` (``RationalPoint``).  A hull is computed once into an
immutable :class:`HullStructure` holding vertices, facet inequalities with
primitive integer normals and the facet/vertex incidences.

Lower-dimensional inputs are handled by projecting onto a set of pivot
coordinates on which the affine hull projects injectively, computing the
hull there, and re-embedding the inequalities.  For such hulls the facet
inequalities are relative to the affine span and ``equations`` carries the
integer equations of that span.

Facets in affine dimension >= 3 come from an incremental double
description: each point is inserted as one more half-space ``b - a.x >= 0``
on the cone of valid inequalities ``(a, b)``, and the extreme rays of that
cone are exactly the facets.  Everything is integer arithmetic, so
coplanar and otherwise degenerate configurations need no special care.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Tuple

from hollowpoly._linalg import dot, nullspace, primitive, rank, rref, sub, vec_gcd

LatticePoint = Tuple[int, ...]
RationalPoint = Tuple[Fraction, ...]


class GeometryError(ValueError):
    """Malformed geometric input (empty set, mixed dimensions, ...)."""


class DegenerateHullError(GeometryError):
    """An operation needed a full-dimensional hull."""


class PreconditionError(GeometryError):
    """Input violates a predicate the operation relies on; ``witness`` shows where."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True, order=True)
class Direction:
    """Primitive nonzero integer vector whose first nonzero entry is positive."""

    v: tuple[int, ...]

    def __post_init__(self):
        if not any(self.v):
            raise ValueError("direction must be nonzero")
        if vec_gcd(self.v) != 1:
            raise ValueError(f"direction {self.v} is not primitive")
        if next(x for x in self.v if x) < 0:
            raise ValueError(f"direction {self.v} is not sign-canonical")

    @classmethod
    def of(cls, vec: Sequence[int]) -> "Direction":
        """Canonical direction of the line spanned by ``vec``."""
        p = primitive(vec)
        if next(x for x in p if x) < 0:
            p = tuple(-x for x in p)
        return cls(p)

    @property
    def l1(self) -> int:
        return sum(abs(x) for x in self.v)

    def __iter__(self):
        return iter(self.v)

    def __len__(self):
        return len(self.v)


@dataclass(frozen=True)
class Facet:
    """Inequality ``normal . x <= offset`` and the vertices it is tight on.

    ``vertices`` are indices into :attr:`HullStructure.vertices`.
    """

    normal: tuple[int, ...]
    offset: int
    vertices: tuple[int, ...]

    def slack(self, p: Sequence) -> Fraction | int:
        return self.offset - dot(self.normal, p)


@dataclass(frozen=True)
class HullStructure:
    generators: tuple[LatticePoint, ...]
    vertices: tuple[LatticePoint, ...]
    facets: tuple[Facet, ...]
    affine_dim: int
    dim: int
    # integer equations (normal, offset) cutting out the affine span
    equations: tuple[tuple[tuple[int, ...], int], ...] = ()
    # coordinates onto which the affine span projects injectively, and the
    # rational affine map back: x = base + sum_i (y_i - base[pivots[i]]) * lift_rows[i]
    pivots: tuple[int, ...] = field(default=(), repr=False, compare=False)
    lift_rows: tuple[tuple[Fraction, ...], ...] = field(default=(), repr=False, compare=False)

    @property
    def full_dimensional(self) -> bool:
        return self.affine_dim == self.dim

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def lift(self, y: Sequence) -> RationalPoint:
        """Point of the affine span whose pivot coordinates are ``y``."""
        base = self.generators[0]
        x = [Fraction(c) for c in base]
        for yi, p, row in zip(y, self.pivots, self.lift_rows):
            t = Fraction(yi) - base[p]
            if t:
                for j, r in enumerate(row):
                    x[j] += t * r
        return tuple(x)

    def in_affine_span(self, p: Sequence) -> bool:
        return all(dot(n, p) == off for n, off in self.equations)

    def tight_facets(self, p: Sequence) -> list[int]:
        return [i for i, f in enumerate(self.facets) if dot(f.normal, p) == f.offset]

    def bounding_box(self) -> tuple[LatticePoint, LatticePoint]:
        lo = tuple(min(c) for c in zip(*self.vertices))
        hi = tuple(max(c) for c in zip(*self.vertices))
        return lo, hi

    def __repr__(self):
        return (f"HullStructure(dim={self.dim}, affine_dim={self.affine_dim}, "
                f"vertices={len(self.vertices)}, facets={len(self.facets)})")


def _check_points(points: Iterable[Sequence[int]]) -> list[LatticePoint]:
    pts = [tuple(p) for p in points]
    if not pts:
        raise GeometryError("point set is empty")
    d = len(pts[0])
    if d < 1:
        raise GeometryError("points must have dimension >= 1")
    for p in pts:
        if len(p) != d:
            raise GeometryError(f"dimension mismatch: {p} is not {d}-dimensional")
        for c in p:
            if not isinstance(c, int) or isinstance(c, bool):
                raise GeometryError(f"non-integer coordinate {c!r} in {p}")
    return pts


def affine_dimension(points: Iterable[Sequence[int]]) -> int:
    """Dimension of the affine span of a nonempty set of integer points."""
    pts = _check_points(points)
    p0 = pts[0]
    return rank([sub(p, p0) for p in pts[1:]])


# ---------------------------------------------------------------------------
# hull algorithms on projected, full-dimensional point sets


def _hull_1d(pts: list[tuple[int, ...]]):
    lo = min(p[0] for p in pts)
    hi = max(p[0] for p in pts)
    return [((1,), hi), ((-1,), -lo)]


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull_2d(pts: list[tuple[int, ...]]):
    """Andrew's monotone chain; returns facet inequalities (normal, offset)."""
    s = sorted(set(pts))
    lower: list = []
    for p in s:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(s):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    ring = lower[:-1] + upper[:-1]
    facets = []
    for u, w in zip(ring, ring[1:] + ring[:1]):
        # counter-clockwise ring: interior on the left, outward normal on the right
        n = primitive((w[1] - u[1], u[0] - w[0]))
        facets.append((n, dot(n, u)))
    return facets


def _simplex_rays(pts, idx):
    """Facet rays (a, b) of the simplex on ``idx``; oriented towards the opposite vertex."""
    rays = []
    for j in idx:
        rows = [tuple(-c for c in pts[i]) + (1,) for i in idx if i != j]
        (ray,) = nullspace(rows, len(pts[0]) + 1)
        if dot(tuple(-c for c in pts[j]) + (1,), ray) < 0:
            ray = tuple(-c for c in ray)
        rays.append(ray)
    return rays


def _hull_dd(pts: list[tuple[int, ...]]):
    """Incremental double description on the cone of valid inequalities."""
    r = len(pts[0])
    cons = [tuple(-c for c in p) + (1,) for p in pts]

    # greedy lexicographic choice of r+1 affinely independent points
    start = [0]
    for i in range(1, len(pts)):
        if rank([sub(pts[j], pts[0]) for j in start[1:] + [i]]) == len(start):
            start.append(i)
            if len(start) == r + 1:
                break
    rays = _simplex_rays(pts, start)
    zeros = []
    for j in start:
        zeros.append(sum(1 << i for i in start if i != j))

    def adjacent(common: int) -> bool:
        if bin(common).count("1") < r - 1:
            return False
        rows = [cons[i] for i in range(len(cons)) if common >> i & 1]
        return rank(rows) == r - 1

    in_start = set(start)
    for i, c in enumerate(cons):
        if i in in_start:
            continue
        vals = [dot(c, ray) for ray in rays]
        neg = [k for k, v in enumerate(vals) if v < 0]
        bit = 1 << i
        if not neg:
            for k, v in enumerate(vals):
                if v == 0:
                    zeros[k] |= bit
            continue
        pos = [k for k, v in enumerate(vals) if v > 0]
        new_rays, new_zeros = [], []
        for k, v in enumerate(vals):
            if v == 0:
                new_rays.append(rays[k])
                new_zeros.append(zeros[k] | bit)
            elif v > 0:
                new_rays.append(rays[k])
                new_zeros.append(zeros[k])
        for kn in neg:
            zn, vn, rn = zeros[kn], vals[kn], rays[kn]
            for kp in pos:
                common = zeros[kp] & zn
                if not adjacent(common):
                    continue
                vp, rp = vals[kp], rays[kp]
                ray = [vp * a - vn * b for a, b in zip(rn, rp)]
                g = vec_gcd(ray)
                new_rays.append(tuple(x // g for x in ray))
                new_zeros.append(common | bit)
        rays, zeros = new_rays, new_zeros

    facets = []
    for ray in rays:
        a, b = ray[:-1], ray[-1]
        g = vec_gcd(a)
        facets.append((tuple(x // g for x in a), b // g))
    return facets


def convex_hull(points: Iterable[Sequence[int]]) -> HullStructure:
    """Exact convex hull of a nonempty set of integer points.

    Duplicates are dropped; generators, vertices and facets are returned in
    lexicographic order so equal inputs give equal structures.
    """
    pts = sorted(set(_check_points(points)))
    d = len(pts[0])
    p0 = pts[0]
    diffs = [sub(p, p0) for p in pts[1:]]
    red, pivots = rref(diffs) if diffs else ([], [])
    r = len(pivots)
    equations = tuple((n, dot(n, p0)) for n in nullspace(red, d)) if r < d else ()
    lift_rows = tuple(tuple(row) for row in red)

    if r == 0:
        return HullStructure(tuple(pts), tuple(pts), (), 0, d, equations,
                             tuple(pivots), lift_rows)

    proj = [tuple(p[j] for j in pivots) for p in pts]
    if r == 1:
        raw = _hull_1d(proj)
    elif r == 2:
        raw = _hull_2d(proj)
    else:
        raw = _hull_dd(proj)

    # re-embed normals into the ambient space on the pivot coordinates
    embedded = []
    for n, off in raw:
        full = [0] * d
        for j, c in zip(pivots, n):
            full[j] = c
        embedded.append((tuple(full), off))
    embedded = sorted(set(embedded))

    tight = [[i for i, (n, off) in enumerate(embedded) if dot(n, p) == off] for p in pts]
    vertices = [p for p, t in zip(pts, tight) if rank([embedded[i][0] for i in t]) == r]
    vindex = {v: i for i, v in enumerate(vertices)}
    incid: list[list[int]] = [[] for _ in embedded]
    for p, t in zip(pts, tight):
        if p in vindex:
            for i in t:
                incid[i].append(vindex[p])
    facets = tuple(Facet(n, off, tuple(inc)) for (n, off), inc in zip(embedded, incid))
    return HullStructure(tuple(pts), tuple(vertices), facets, r, d, equations,
                         tuple(pivots), lift_rows)


def contains(hull: HullStructure, p: Sequence, mode: str = "closed") -> bool:
    """Membership of a rational point.

    ``mode="closed"`` tests the hull itself; ``mode="open"`` tests its
    topological interior, which is empty unless the hull is full-dimensional.
    """
    if len(p) != hull.dim:
        raise GeometryError(f"point {tuple(p)} is not {hull.dim}-dimensional")
    if mode == "open":
        if not hull.full_dimensional:
            return False
        return all(dot(f.normal, p) < f.offset for f in hull.facets)
    if mode != "closed":
        raise ValueError(f"unknown containment mode {mode!r}")
    if not hull.in_affine_span(p):
        return False
    if hull.affine_dim == 0:
        return tuple(p) == hull.vertices[0]
    return all(dot(f.normal, p) <= f.offset for f in hull.facets)


def as_rational(p: Sequence) -> RationalPoint:
    return tuple(Fraction(c) for c in p)


def l1(v: Sequence[int]) -> int:
    return sum(abs(x) for x in v)


def gcd_of_difference(p: Sequence[int], q: Sequence[int]) -> int:
    g = 0
    for a, b in zip(p, q):
        g = gcd(g, a - b)
    return g
