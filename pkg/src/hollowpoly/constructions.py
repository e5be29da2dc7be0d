"""The explicit point sets behind the vertex-count bounds.

Each generator returns a sorted list of integer tuples.  :func:`build` wraps
one in a :class:`NamedConstruction` listing the claims it is supposed to
certify, and :func:`check_claims` re-verifies them with the predicate modules.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass, field

from hollowpoly.exactgeo import LatticePoint, convex_hull


def _unit(d: int, i: int, scale: int = 1) -> LatticePoint:
    return tuple(scale if j == i else 0 for j in range(d))


def unit_simplex(d: int) -> list[LatticePoint]:
    if d < 1:
        raise ValueError("d must be >= 1")
    return sorted([(0,) * d] + [_unit(d, i) for i in range(d)])


def dilated_simplex(d: int) -> list[LatticePoint]:
    """``conv(0, d e_1, ..., d e_d)``: lattice width d, no interior lattice point."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return sorted([(0,) * d] + [_unit(d, i, d) for i in range(d)])


def doignon_cube(d: int) -> list[LatticePoint]:
    if d < 1:
        raise ValueError("d must be >= 1")
    return list(itertools.product((0, 1), repeat=d))


def cross_in_cube(d: int) -> list[LatticePoint]:
    """``{e_i} U {1 - e_i}``, an affine cross-polytope inside the unit cube.

    For d = 2 the two halves coincide and only two points remain; that case
    is returned with a warning since it is not full-dimensional.
    """
    if d < 2:
        raise ValueError("cross_in_cube needs d >= 2")
    pts = {_unit(d, i) for i in range(d)}
    pts |= {tuple(1 - c for c in _unit(d, i)) for i in range(d)}
    if d == 2:
        warnings.warn("cross_in_cube(2) collapses to 2 points", stacklevel=2)
    return sorted(pts)


def moment_polygon(n: int) -> list[tuple[int, int]]:
    return [(t, t * t) for t in range(n)]


def polygon_lift(n: int, d: int, polygon=None) -> list[LatticePoint]:
    """A convex lattice n-gon in the first two coordinates plus ``e_3, ..., e_d``.

    The default polygon is ``(t, t^2)`` for ``t = 0..n-1``.  A caller-supplied
    polygon must be ``n`` lattice points in convex position.
    """
    if n < 3 or d < 3:
        raise ValueError("polygon_lift needs n >= 3 and d >= 3")
    poly = [tuple(p) for p in (polygon if polygon is not None else moment_polygon(n))]
    if len(poly) != n or len(convex_hull(poly).vertices) != n:
        raise ValueError("polygon must be n lattice points in convex position")
    pts = [p + (0,) * (d - 2) for p in poly]
    pts += [_unit(d, i) for i in range(2, d)]
    return sorted(pts)


def hypercube_k(k: int, d: int) -> list[LatticePoint]:
    """The ``k**d`` grid points of ``[1, k]^d``."""
    if k < 1 or d < 1:
        raise ValueError("k and d must be >= 1")
    return list(itertools.product(range(1, k + 1), repeat=d))


def ball_polytope(k: int, d: int) -> list[LatticePoint]:
    """Integer points ``p`` with ``4 |p|^2 <= (k - 1)^2``, i.e. in the ball of radius (k-1)/2."""
    if k < 1 or d < 1:
        raise ValueError("k and d must be >= 1")
    r2 = (k - 1) ** 2  # compare 4|p|^2 against this

    def rec(i, used):
        if i == d:
            yield ()
            return
        # largest c with 4 * (used + c^2) <= r2
        bound = math.isqrt((r2 - 4 * used) // 4)
        for c in range(-bound, bound + 1):
            for tail in rec(i + 1, used + c * c):
                yield (c,) + tail

    return list(rec(0, 0))


@dataclass(frozen=True)
class NamedConstruction:
    name: str
    params: dict
    points: list
    certified_claims: tuple[str, ...] = field(default=())


_CLAIMS = {
    "unit_simplex": ("empty", "hollow", "vertices=d+1"),
    "dilated_simplex": ("hollow", "lattice_width=d"),
    "doignon_cube": ("empty", "vertices=2^d"),
    "cross_in_cube": ("hollow", "simplicial", "vertices=2d"),
    "polygon_lift": ("vertices=n+d-2", "lattice_face_dim<=2"),
    "hypercube_k": ("lattice_points=k^d", "longest_segment=k-1"),
    "ball_polytope": ("longest_segment<k",),
}

_BUILDERS = {
    "unit_simplex": lambda p: unit_simplex(p["d"]),
    "dilated_simplex": lambda p: dilated_simplex(p["d"]),
    "doignon_cube": lambda p: doignon_cube(p["d"]),
    "cross_in_cube": lambda p: cross_in_cube(p["d"]),
    "polygon_lift": lambda p: polygon_lift(p["n"], p["d"]),
    "hypercube_k": lambda p: hypercube_k(p["k"], p["d"]),
    "ball_polytope": lambda p: ball_polytope(p["k"], p["d"]),
}

NAMES = tuple(_BUILDERS)


def build(name: str, **params) -> NamedConstruction:
    if name not in _BUILDERS:
        raise ValueError(f"unknown construction {name!r}; choose from {', '.join(NAMES)}")
    try:
        pts = _BUILDERS[name](params)
    except KeyError as exc:
        raise ValueError(f"{name} needs parameter {exc.args[0]!r}") from None
    claims = _CLAIMS[name]
    if name == "cross_in_cube" and params["d"] == 2:
        claims = ()
    return NamedConstruction(name, dict(params), pts, claims)


def check_claims(c: NamedConstruction) -> dict[str, bool]:
    """Re-verify each certified claim; returns claim -> outcome."""
    from hollowpoly.classify import is_empty_in_lattice, is_hollow, is_simplicial
    from hollowpoly.lattice import enumerate_lattice_points, locate
    from hollowpoly.segments import longest_lattice_segment
    from hollowpoly.width import lattice_width

    hull = convex_hull(c.points)
    p = c.params
    d = p.get("d")
    out = {}
    for claim in c.certified_claims:
        if claim == "empty":
            ok = bool(is_empty_in_lattice(c.points))
        elif claim == "hollow":
            ok = bool(is_hollow(hull))
        elif claim == "simplicial":
            ok = hull.full_dimensional and bool(is_simplicial(hull))
        elif claim == "vertices=d+1":
            ok = hull.num_vertices == d + 1
        elif claim == "vertices=2^d":
            ok = hull.num_vertices == 2 ** d
        elif claim == "vertices=2d":
            ok = hull.num_vertices == 2 * d
        elif claim == "vertices=n+d-2":
            ok = hull.num_vertices == p["n"] + d - 2
        elif claim == "lattice_width=d":
            ok = lattice_width(hull).value == d
        elif claim == "lattice_face_dim<=2":
            ok = all(locate(hull, q).face_dim <= 2 for q in enumerate_lattice_points(hull))
        elif claim == "lattice_points=k^d":
            ok = len(enumerate_lattice_points(hull)) == p["k"] ** d
        elif claim == "longest_segment=k-1":
            ok = longest_lattice_segment(hull).length == p["k"] - 1
        elif claim == "longest_segment<k":
            ok = longest_lattice_segment(hull).length < p["k"]
        else:  # pragma: no cover
            raise ValueError(f"unknown claim {claim}")
        out[claim] = ok
    return out
