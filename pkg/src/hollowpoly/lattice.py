"""Lattice points of hulls, their minimal faces, and the parity pigeonhole."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from hollowpoly.exactgeo import (
    GeometryError,
    HullStructure,
    LatticePoint,
    affine_dimension,
    contains,
)

VERTEX = "vertex"
BOUNDARY = "boundary_nonvertex"
INTERIOR = "interior"
OUTSIDE = "outside"


@dataclass(frozen=True)
class PointLocation:
    status: str
    minimal_face: tuple[int, ...] | None  # vertex indices of the hull
    face_dim: int | None


def _box_scan(hull: HullStructure) -> Iterable[LatticePoint]:
    """Integer points of the hull by scanning its box in pivot coordinates."""
    proj_facets = [([f.normal[j] for j in hull.pivots], f.offset) for f in hull.facets]
    piv_vertices = [[v[j] for j in hull.pivots] for v in hull.vertices]
    lo = [min(c) for c in zip(*piv_vertices)]
    hi = [max(c) for c in zip(*piv_vertices)]
    full = hull.full_dimensional
    for y in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if all(sum(a * b for a, b in zip(n, y)) <= off for n, off in proj_facets):
            if full:
                yield y
                continue
            x = hull.lift(y)
            if all(c.denominator == 1 for c in x):
                yield tuple(int(c) for c in x)


def enumerate_lattice_points(hull: HullStructure) -> list[LatticePoint]:
    """All integer points of the (closed) hull, in lexicographic order."""
    if hull.affine_dim == 0:
        return [hull.vertices[0]]
    pts = list(_box_scan(hull))
    # the scan runs in pivot order; for full-dimensional hulls that is already lexicographic
    return pts if hull.full_dimensional else sorted(pts)


def interior_lattice_points(hull: HullStructure) -> list[LatticePoint]:
    if not hull.full_dimensional:
        return []
    return [p for p in enumerate_lattice_points(hull) if contains(hull, p, "open")]


def locate(hull: HullStructure, p: Sequence[int]) -> PointLocation:
    """Classify ``p`` against the hull and report the smallest face containing it.

    The minimal face is the intersection of all facets tight at ``p``; for a
    point in the relative interior that is the whole hull.  A lower-dimensional
    hull has no interior, so its relative-interior points count as boundary.
    """
    p = tuple(p)
    if len(p) != hull.dim:
        raise GeometryError(f"point {p} is not {hull.dim}-dimensional")
    if not contains(hull, p, "closed"):
        return PointLocation(OUTSIDE, None, None)
    face = set(range(len(hull.vertices)))
    tight = hull.tight_facets(p)
    for i in tight:
        face &= set(hull.facets[i].vertices)
    face_t = tuple(sorted(face))
    face_dim = affine_dimension([hull.vertices[i] for i in face_t])
    if len(face_t) == 1:
        status = VERTEX
    elif not tight and hull.full_dimensional:
        status = INTERIOR
    else:
        status = BOUNDARY
    return PointLocation(status, face_t, face_dim)


def parity_witness(points: Iterable[Sequence[int]]):
    """Two points with equal coordinate parities, and their integral midpoint.

    Points are scanned in lexicographic order and the first repeated parity
    class is reported as ``(x, y, midpoint)`` with ``x < y``.  Returns None when
    all parity classes are distinct, which forces at most ``2**d`` points.
    """
    seen: dict[tuple[int, ...], LatticePoint] = {}
    for q in sorted(set(tuple(p) for p in points)):
        key = tuple(c & 1 for c in q)
        if key in seen:
            x = seen[key]
            mid = tuple((a + b) // 2 for a, b in zip(x, q))
            return x, q, mid
        seen[key] = q
    return None


def midpoint(x: Sequence[int], y: Sequence[int]) -> tuple[Fraction, ...]:
    return tuple(Fraction(a + b, 2) for a, b in zip(x, y))
