"""Lattice segments: longest one in a polytope, the mod-k pigeonhole, and
translations that dodge a sublattice ``m Z^d``.

A lattice segment ``[x, y]`` with integer endpoints has length
``gcd(y - x)``: that many unit steps of the primitive vector ``(y - x) / gcd``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from hollowpoly._linalg import sub, vec_gcd
from hollowpoly.exactgeo import (
    Direction,
    GeometryError,
    HullStructure,
    LatticePoint,
    contains,
    convex_hull,
)
from hollowpoly.lattice import enumerate_lattice_points


@dataclass(frozen=True)
class SegmentWitness:
    x: LatticePoint
    y: LatticePoint
    step: Direction | None  # None only for the length-0 segment
    length: int

    def points(self) -> list[LatticePoint]:
        if self.step is None:
            return [self.x]
        return [tuple(a + j * s for a, s in zip(self.x, self.step.v)) for j in range(self.length + 1)]


def _segment(x: LatticePoint, y: LatticePoint) -> SegmentWitness:
    """Segment between ``x < y`` (lexicographic), so the step is sign-canonical."""
    diff = sub(y, x)
    g = vec_gcd(diff)
    return SegmentWitness(x, y, Direction(tuple(c // g for c in diff)), g)


def longest_lattice_segment(hull: HullStructure) -> SegmentWitness:
    """Longest lattice segment with both ends among the hull's lattice points.

    Pairs are compared by gcd of their difference; among equally long ones the
    lexicographically first pair ``(x, y)`` wins.
    """
    pts = enumerate_lattice_points(hull)
    if not pts:
        raise GeometryError("hull has no lattice points")
    best = SegmentWitness(pts[0], pts[0], None, 0)
    for i, x in enumerate(pts):
        for y in pts[i + 1:]:
            g = vec_gcd(sub(y, x))
            if g > best.length:
                best = _segment(x, y)
    return best


def modk_witness(points: Iterable[Sequence[int]], k: int) -> SegmentWitness | None:
    """Two points congruent mod ``k`` and the full segment between them.

    Guaranteed to exist once there are more than ``k**d`` points.  The reported
    length is the gcd of the difference, which is a positive multiple of ``k``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    seen: dict[tuple[int, ...], LatticePoint] = {}
    for q in sorted(set(tuple(p) for p in points)):
        key = tuple(c % k for c in q)
        if key in seen:
            return _segment(seen[key], q)
        seen[key] = q
    return None


def translate_avoiding_sublattice(hull: HullStructure, m: int):
    """First shift ``t`` in ``[0, m)^d`` (lexicographic) with ``(P + t)`` missing ``m Z^d``.

    By periodicity every integer shift is equivalent mod ``m`` to one in the
    box, so None means no integer translation works at all.  Returns
    ``(t, translated hull)``.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    residues = {tuple(c % m for c in p) for p in enumerate_lattice_points(hull)}
    for t in itertools.product(range(m), repeat=hull.dim):
        if tuple(-c % m for c in t) not in residues:
            moved = convex_hull([tuple(a + b for a, b in zip(v, t)) for v in hull.vertices])
            return t, moved
    return None


def witness_is_valid(w: SegmentWitness, hull: HullStructure) -> bool:
    pts = w.points()
    return pts[-1] == w.y and all(contains(hull, p) for p in pts)
