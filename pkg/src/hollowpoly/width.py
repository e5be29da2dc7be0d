"""Directional width, lattice hyperplanes, and certified lattice width.

The lattice width is found by enumerating primitive directions in layers of
growing l1 norm.  If the hull contains an axis cube ``c + [-rho, rho]^d`` then
``w_v >= 2 * rho * |v|_1`` for every ``v``, so once ``2 * rho * s`` exceeds the
best width seen, no direction of l1 norm ``>= s`` can beat or tie it and the
search stops.  The cube comes from an exact LP over the facet inequalities,
which keeps every quantity rational.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Union

from hollowpoly import _lp
from hollowpoly._linalg import dot
from hollowpoly.exactgeo import (
    DegenerateHullError,
    Direction,
    HullStructure,
    PreconditionError,
    RationalPoint,
    contains,
)
from hollowpoly.lattice import enumerate_lattice_points


@dataclass(frozen=True)
class ScaledBody:
    """The body ``center + factor * (hull - center)``, closed or open."""

    hull: HullStructure
    center: RationalPoint
    factor: Fraction = Fraction(1, 2)
    open: bool = False

    @property
    def dim(self) -> int:
        return self.hull.dim

    @property
    def vertices(self) -> list[RationalPoint]:
        return [self._image(v) for v in self.hull.vertices]

    def _image(self, x) -> RationalPoint:
        return tuple(c + self.factor * (xi - c) for xi, c in zip(x, self.center))

    def _preimage(self, z) -> RationalPoint:
        return tuple(c + (zi - c) / self.factor for zi, c in zip(z, self.center))

    def contains(self, z: Sequence) -> bool:
        return contains(self.hull, self._preimage(z), "open" if self.open else "closed")

    def lattice_points(self) -> list[tuple[int, ...]]:
        verts = self.vertices
        lo = [math.ceil(min(c)) for c in zip(*verts)]
        hi = [math.floor(max(c)) for c in zip(*verts)]
        boxes = [range(a, b + 1) for a, b in zip(lo, hi)]
        return [z for z in itertools.product(*boxes) if self.contains(z)]


Body = Union[HullStructure, ScaledBody]


@dataclass(frozen=True)
class PruningCertificate:
    rho: Fraction
    center: RationalPoint
    seed_direction: Direction
    seed_width: Fraction
    # (l1 norm of the layer, directions evaluated in it, best width after it)
    layers: tuple[tuple[int, int, Fraction], ...]
    # first layer skipped, its lower bound 2*rho*layer, and the best width it beat
    stop_layer: int
    stop_bound: Fraction
    stop_best: Fraction

    @property
    def evaluated(self) -> int:
        return sum(n for _, n, _ in self.layers)


@dataclass(frozen=True)
class WidthResult:
    direction: Direction
    value: Fraction
    argmax_vertex: tuple
    argmin_vertex: tuple
    hyperplane_count: int
    lattice_width: Fraction | None = None
    certificate: PruningCertificate | None = None


def _as_direction(v) -> Direction:
    return v if isinstance(v, Direction) else Direction.of(v)


def _extremes(body: Body, v: Direction):
    vals = [(Fraction(dot(x, v.v)), x) for x in body.vertices]
    hi = max(val for val, _ in vals)
    lo = min(val for val, _ in vals)
    argmax = min(x for val, x in vals if val == hi)
    argmin = min(x for val, x in vals if val == lo)
    return lo, hi, argmin, argmax


def _integers_between(lo: Fraction, hi: Fraction, open_: bool) -> int:
    if open_:
        n = math.ceil(hi) - math.floor(lo) - 1
    else:
        n = math.floor(hi) - math.ceil(lo) + 1
    return max(n, 0)


def count_lattice_hyperplanes(body: Body, v) -> int:
    """Number of hyperplanes ``<x, v> = t`` with integer ``t`` that meet the body."""
    v = _as_direction(v)
    lo, hi, _, _ = _extremes(body, v)
    open_ = isinstance(body, ScaledBody) and body.open
    if open_ and not body.hull.full_dimensional:
        return 0
    return _integers_between(lo, hi, open_)


def directional_width(body: Body, v) -> WidthResult:
    """Exact ``max <x,v> - min <x,v>`` over the body, with the extremal vertices.

    ``v`` may be any nonzero integer vector; it is reduced to its primitive
    canonical form first, so ``(2, 0)`` and ``(-1, 0)`` give the width along ``(1, 0)``.
    """
    v = _as_direction(v)
    lo, hi, argmin, argmax = _extremes(body, v)
    open_ = isinstance(body, ScaledBody) and body.open
    return WidthResult(v, hi - lo, argmax, argmin, _integers_between(lo, hi, open_))


def linf_inradius(hull: HullStructure) -> tuple[Fraction, RationalPoint]:
    """Largest axis cube ``center + [-rho, rho]^d`` inside a full-dimensional hull.

    Solves max rho s.t. ``a.c + rho * |a|_1 <= b`` for every facet ``(a, b)``,
    writing ``c = v0 + y+ - y-`` around the first vertex so the origin is feasible.
    """
    if not hull.full_dimensional:
        raise DegenerateHullError("inradius needs a full-dimensional hull")
    d = hull.dim
    v0 = hull.vertices[0]
    rows, rhs = [], []
    for f in hull.facets:
        a = list(f.normal)
        rows.append(a + [-x for x in a] + [sum(abs(x) for x in a)])
        rhs.append(f.offset - dot(a, v0))
    obj = [0] * (2 * d) + [1]
    rho, x = _lp.maximize(obj, rows, rhs)
    center = tuple(Fraction(p) + x[i] - x[d + i] for i, p in enumerate(v0))
    return rho, center


def primitive_directions(d: int, norm: int) -> Iterator[Direction]:
    """Canonical primitive directions with l1 norm exactly ``norm``."""

    def rec(i, remaining, started):
        if i == d:
            if remaining == 0:
                yield ()
            return
        for x in range(-remaining, remaining + 1):
            if not started and x < 0:
                continue
            for tail in rec(i + 1, remaining - abs(x), started or x != 0):
                yield (x,) + tail

    for v in rec(0, norm, False):
        if math.gcd(*v) == 1:
            yield Direction(v)


def _better(w, v: Direction, best_w, best_v: Direction) -> bool:
    # ties go to the lexicographically largest canonical direction
    return w < best_w or (w == best_w and v.v > best_v.v)


def lattice_width(hull: HullStructure) -> WidthResult:
    """Certified minimum of the directional width over all nonzero integer directions."""
    if not hull.full_dimensional:
        raise DegenerateHullError("lattice width needs a full-dimensional hull")
    d = hull.dim
    rho, center = linf_inradius(hull)

    best_v = None
    best_w = None
    for i in range(d):
        v = Direction(tuple(int(i == j) for j in range(d)))
        w = directional_width(hull, v).value
        if best_v is None or _better(w, v, best_w, best_v):
            best_v, best_w = v, w
    seed_v, seed_w = best_v, best_w

    layers = []
    s = 1
    while 2 * rho * s <= best_w:
        n = 0
        for v in primitive_directions(d, s):
            n += 1
            w = directional_width(hull, v).value
            if _better(w, v, best_w, best_v):
                best_v, best_w = v, w
        layers.append((s, n, best_w))
        s += 1
    cert = PruningCertificate(rho, center, seed_v, seed_w, tuple(layers),
                              s, 2 * rho * s, best_w)
    res = directional_width(hull, best_v)
    return WidthResult(res.direction, res.value, res.argmax_vertex, res.argmin_vertex,
                       res.hyperplane_count, lattice_width=res.value, certificate=cert)


def half_scaled(hull: HullStructure, center: Sequence) -> ScaledBody:
    return ScaledBody(hull, tuple(Fraction(c) for c in center), Fraction(1, 2))


@dataclass(frozen=True)
class FlatnessReport:
    dim: int
    lattice_width: Fraction
    direction: Direction
    reference: float  # d * (log d)^3, approximate
    ratio: float | None
    hyperplanes: int
    center: RationalPoint
    half_body_hyperplanes: int
    half_body_lattice_points: tuple
    lattice_points: int


def flatness_audit(hull: HullStructure) -> FlatnessReport:
    """Lattice width of a hollow hull next to the ``d (log d)^3`` reference.

    There is no pass/fail on the width: the constant in the flatness bound is
    unknown.  The one exact check is that the body shrunk by 1/2 about an
    interior point (the inradius center) has no lattice point at all.
    """
    if not hull.full_dimensional:
        raise DegenerateHullError("flatness audit needs a full-dimensional hull")
    pts = enumerate_lattice_points(hull)
    for p in pts:
        if contains(hull, p, "open"):
            raise PreconditionError(f"interior lattice point {p}: hull is not hollow", p)
    res = lattice_width(hull)
    d = hull.dim
    ref = d * math.log(d) ** 3
    body = half_scaled(hull, res.certificate.center)
    return FlatnessReport(
        dim=d,
        lattice_width=res.value,
        direction=res.direction,
        reference=ref,
        ratio=float(res.value) / ref if ref > 0 else None,
        hyperplanes=res.hyperplane_count,
        center=res.certificate.center,
        half_body_hyperplanes=count_lattice_hyperplanes(body, res.direction),
        half_body_lattice_points=tuple(body.lattice_points()),
        lattice_points=len(pts),
    )
