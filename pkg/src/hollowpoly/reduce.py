"""Swap boundary lattice points into the vertex set until the polytope is empty.

A swap takes a non-vertex lattice point ``x`` of a hollow polytope, the
smallest face containing it, and a vertex ``y`` of that face, and replaces
``y`` by ``x`` in the vertex set.  The new polytope sits inside the old one,
so it stays hollow and has strictly fewer non-vertex lattice points.  When
the face is a simplex, ``x`` becomes a vertex and the vertex count is kept.

That the new polytope is again simplicial does *not* always hold: some
hollow simplicial polytopes in dimension 3 admit no swap at all whose result
is simplicial further down the line.  ``reduce_to_empty`` therefore searches
(lexicographically, depth first) for a sequence of swaps keeping every
intermediate polytope simplicial, and only if none exists settles for a
sequence that merely keeps the vertex count, recording the non-simplicial
steps in ``ReductionTrace.findings``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from hollowpoly.classify import is_hollow, is_simplicial
from hollowpoly.exactgeo import (
    HullStructure,
    LatticePoint,
    PreconditionError,
    convex_hull,
)
from hollowpoly.lattice import enumerate_lattice_points, locate

log = logging.getLogger(__name__)


class ReductionError(RuntimeError):
    """No swap sequence reaches an empty polytope with the same vertex count."""

    def __init__(self, message: str, trace: "ReductionTrace | None" = None, hull=None):
        super().__init__(message)
        self.trace = trace
        self.hull = hull


@dataclass(frozen=True)
class SwapStep:
    inserted: LatticePoint  # x, the boundary lattice point that becomes a vertex
    removed: LatticePoint   # y, the vertex it replaces
    face: tuple[LatticePoint, ...]  # vertices of the minimal face of x in the old polytope
    nonvertex_before: int
    nonvertex_after: int
    simplicial_after: bool


@dataclass
class ReductionTrace:
    initial_vertices: int
    initial_lattice_points: int
    steps: list[SwapStep] = field(default_factory=list)
    final: HullStructure | None = None
    findings: list[str] = field(default_factory=list)
    # swaps tried and abandoned by the search before the reported path
    backtracks: int = 0

    @property
    def final_vertices(self) -> int | None:
        return None if self.final is None else len(self.final.vertices)

    @property
    def all_simplicial(self) -> bool:
        return all(s.simplicial_after for s in self.steps)


def nonvertex_lattice_points(hull: HullStructure) -> list[LatticePoint]:
    verts = set(hull.vertices)
    return [p for p in enumerate_lattice_points(hull) if p not in verts]


def _check_input(hull: HullStructure) -> None:
    if not hull.full_dimensional:
        raise PreconditionError(
            f"polytope is not full-dimensional (affine dim {hull.affine_dim})", None)
    s = is_simplicial(hull)
    if not s:
        raise PreconditionError(f"polytope is not simplicial: facet {s.witness.normal}", s.witness)
    h = is_hollow(hull)
    if not h:
        raise PreconditionError(f"polytope is not hollow: interior point {h.witness}", h.witness)


def admissible_swaps(hull: HullStructure, nonvertex: list[LatticePoint] | None = None):
    """All ``(x, y, face)`` choices, lexicographic in ``x`` and then ``y``."""
    if nonvertex is None:
        nonvertex = nonvertex_lattice_points(hull)
    for x in nonvertex:
        loc = locate(hull, x)
        face = tuple(hull.vertices[i] for i in loc.minimal_face)
        for y in face:
            yield x, y, face


def swap(hull: HullStructure, x: LatticePoint, y: LatticePoint) -> HullStructure:
    return convex_hull([v for v in hull.vertices if v != y] + [tuple(x)])


def swap_step(hull: HullStructure) -> HullStructure | None:
    """The lexicographically first swap, or None when the polytope is already empty.

    The result is returned as is; callers that need it simplicial must check.
    """
    _check_input(hull)
    x, y, _ = next(admissible_swaps(hull), (None, None, None))
    if x is None:
        return None
    new = swap(hull, x, y)
    if not new.full_dimensional:
        raise ReductionError(f"swapping {y} for {x} collapsed the polytope", None, new)
    return new


def _search(hull, nonvertex, strict, memo, counter):
    """Depth-first search for a swap path to an empty polytope.

    Returns a list of ``(x, y, face, new_hull, new_nonvertex, simplicial)`` or None.
    """
    if not nonvertex:
        return []
    key = hull.vertices
    if key in memo:
        return None
    n_vert = len(hull.vertices)
    for x, y, face in admissible_swaps(hull, nonvertex):
        new = swap(hull, x, y)
        if not new.full_dimensional or len(new.vertices) != n_vert:
            counter[0] += 1
            continue
        simplicial = bool(is_simplicial(new))
        if strict and not simplicial:
            counter[0] += 1
            continue
        new_nonvertex = nonvertex_lattice_points(new)
        rest = _search(new, new_nonvertex, strict, memo, counter)
        if rest is not None:
            return [(x, y, face, new, new_nonvertex, simplicial)] + rest
        counter[0] += 1
    memo.add(key)
    return None


def reduce_to_empty(hull: HullStructure) -> tuple[HullStructure, ReductionTrace]:
    """Reduce a hollow simplicial polytope to an empty one with as many vertices.

    Raises :class:`PreconditionError` on bad input and :class:`ReductionError`
    if no vertex-preserving swap sequence exists (which would contradict the
    ``2**d`` bound this reduction is meant to witness).
    """
    _check_input(hull)
    n_lattice = len(enumerate_lattice_points(hull))
    trace = ReductionTrace(len(hull.vertices), n_lattice)
    nonvertex = nonvertex_lattice_points(hull)
    counter = [0]
    path = _search(hull, nonvertex, True, set(), counter)
    if path is None:
        msg = "no swap sequence keeps every intermediate polytope simplicial"
        log.warning("%s: %s", msg, hull.vertices)
        trace.findings.append(msg)
        path = _search(hull, nonvertex, False, set(), counter)
    trace.backtracks = counter[0]
    if path is None:
        raise ReductionError("no swap sequence preserves the vertex count", trace, hull)

    before = len(nonvertex)
    for i, (x, y, face, new, new_nonvertex, simplicial) in enumerate(path, 1):
        trace.steps.append(SwapStep(x, y, face, before, len(new_nonvertex), simplicial))
        if not simplicial:
            trace.findings.append(f"step {i} ({y} -> {x}) left a non-simplicial polytope")
        if len(new_nonvertex) >= before or not is_hollow(new):
            raise ReductionError(f"step {i} broke hollowness or the descent", trace, new)
        before = len(new_nonvertex)
        hull = new
    if len(trace.steps) > n_lattice:
        raise ReductionError("step bound exceeded", trace, hull)
    trace.final = hull
    return hull, trace
