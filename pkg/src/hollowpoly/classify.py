"""Emptiness, hollowness, simpliciality and general position, with witnesses.

Every predicate returns a :class:`Verdict`, which is truthy exactly when the
predicate holds.  When it fails, ``witness`` carries something that can be
re-checked independently: a lattice point, a facet, or a subset of points.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from hollowpoly._linalg import rank, sub
from hollowpoly.exactgeo import (
    DegenerateHullError,
    HullStructure,
    LatticePoint,
    _check_points,
    contains,
    convex_hull,
)
from hollowpoly.lattice import enumerate_lattice_points


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Any = None
    degenerate: bool = False

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class ClassificationReport:
    empty: bool
    hollow: bool
    simplicial: bool | None
    general_position: bool
    degenerate: bool
    vertices: tuple[LatticePoint, ...]
    lattice_points: int
    witnesses: dict = field(default_factory=dict)


def _hull_of(points_or_hull) -> HullStructure:
    if isinstance(points_or_hull, HullStructure):
        return points_or_hull
    return convex_hull(points_or_hull)


def is_empty_in_lattice(points: Iterable[Sequence[int]]) -> Verdict:
    """True iff every input point is a vertex and the hull has no other lattice point.

    The witness is the first input point that is not a vertex or, failing
    that, the lexicographically first non-vertex lattice point of the hull.
    """
    pts = _check_points(points)
    if len(set(pts)) != len(pts):
        dup = next(p for p in sorted(pts) if pts.count(p) > 1)
        return Verdict(False, dup)
    hull = convex_hull(pts)
    verts = set(hull.vertices)
    for p in sorted(pts):
        if p not in verts:
            return Verdict(False, p)
    for p in enumerate_lattice_points(hull):
        if p not in verts:
            return Verdict(False, p)
    return Verdict(True)


def is_hollow(points, allow_degenerate: bool = False) -> Verdict:
    """True iff no lattice point lies in the interior of the hull.

    A lower-dimensional hull has empty interior.  By default that case is
    reported as ``Verdict(False, degenerate=True)`` rather than as vacuously
    hollow; pass ``allow_degenerate=True`` for the topological convention.
    """
    hull = _hull_of(points)
    if not hull.full_dimensional:
        return Verdict(allow_degenerate, None, degenerate=True)
    for p in enumerate_lattice_points(hull):
        if contains(hull, p, "open"):
            return Verdict(False, p)
    return Verdict(True)


def is_simplicial(hull) -> Verdict:
    """Every facet carries exactly ``d`` vertices; witness is the first facet that doesn't."""
    hull = _hull_of(hull)
    if not hull.full_dimensional:
        raise DegenerateHullError(
            f"simpliciality needs a full-dimensional hull (affine dim {hull.affine_dim} < {hull.dim})")
    for f in hull.facets:
        if len(f.vertices) != hull.dim:
            return Verdict(False, f)
    return Verdict(True)


def is_general_position(points: Iterable[Sequence[int]]) -> Verdict:
    """No ``d+1`` of the points lie on a common affine hyperplane.

    Subsets are scanned in lexicographic order of the sorted input and the
    first affinely dependent one is the witness.
    """
    pts = sorted(set(_check_points(points)))
    d = len(pts[0])
    if len(pts) < d + 1:
        return Verdict(True)
    for subset in itertools.combinations(pts, d + 1):
        p0 = subset[0]
        if rank([sub(q, p0) for q in subset[1:]]) < d:
            return Verdict(False, subset)
    return Verdict(True)


def classify(points) -> ClassificationReport:
    """All four predicates at once; general position is tested on the vertex set."""
    pts = sorted(set(_check_points(points)))
    hull = convex_hull(pts)
    witnesses: dict = {}
    empty = is_empty_in_lattice(pts)
    if not empty:
        witnesses["empty"] = empty.witness
    hollow = is_hollow(hull)
    if not hollow and not hollow.degenerate:
        witnesses["hollow"] = hollow.witness
    simplicial = None
    if hull.full_dimensional:
        s = is_simplicial(hull)
        simplicial = s.holds
        if not s:
            witnesses["simplicial"] = s.witness
    gp = is_general_position(hull.vertices)
    if not gp:
        witnesses["general_position"] = gp.witness
    return ClassificationReport(
        empty=empty.holds,
        hollow=hollow.holds,
        simplicial=simplicial,
        general_position=gp.holds,
        degenerate=not hull.full_dimensional,
        vertices=hull.vertices,
        lattice_points=len(enumerate_lattice_points(hull)),
        witnesses=witnesses,
    )
