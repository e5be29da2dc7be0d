import random

from hypothesis import given, settings
from hypothesis import strategies as st

from hollowpoly.constructions import cross_in_cube, hypercube_k, polygon_lift
from hollowpoly.exactgeo import contains, convex_hull
from hollowpoly.lattice import (
    BOUNDARY,
    INTERIOR,
    OUTSIDE,
    VERTEX,
    enumerate_lattice_points,
    interior_lattice_points,
    locate,
    parity_witness,
)

from helpers import random_hull
from oracles import box_lattice_points, brute_facets


def test_unimodular_triangle():
    assert enumerate_lattice_points(convex_hull([(0, 0), (1, 0), (0, 1)])) == [(0, 0), (0, 1), (1, 0)]


def test_cross_in_cube_points_match_box_scan():
    pts = cross_in_cube(3)
    hull = convex_hull(pts)
    assert enumerate_lattice_points(hull) == box_lattice_points(pts, brute_facets(pts))


def test_random_hulls_match_box_scan():
    rng = random.Random(7)
    for d in (2, 3):
        for _ in range(40):
            hull = random_hull(rng, d, 5)
            expected = box_lattice_points(hull.vertices, brute_facets(hull.vertices))
            assert enumerate_lattice_points(hull) == expected


def test_degenerate_enumeration():
    seg = convex_hull([(0, 0, 0), (2, 4, 6)])
    assert enumerate_lattice_points(seg) == [(0, 0, 0), (1, 2, 3), (2, 4, 6)]
    tilted = convex_hull([(0, 0, 0), (2, 0, 2), (0, 2, 2)])
    assert len(enumerate_lattice_points(tilted)) == 6
    assert interior_lattice_points(tilted) == []


def test_hypercube_counts():
    for d in (1, 2, 3):
        for k in range(1, 6):
            assert len(enumerate_lattice_points(convex_hull(hypercube_k(k, d)))) == k ** d


def test_locate_examples():
    sq = convex_hull([(0, 0), (2, 0), (0, 2), (2, 2)])
    assert locate(sq, (1, 1)).status == INTERIOR
    edge = locate(sq, (1, 0))
    assert edge.status == BOUNDARY and edge.face_dim == 1
    assert locate(sq, (0, 0)).status == VERTEX
    assert locate(sq, (0, 0)).face_dim == 0
    assert locate(sq, (3, 0)).status == OUTSIDE


def test_polygon_lift_faces():
    hull = convex_hull(polygon_lift(6, 3))
    pts = enumerate_lattice_points(hull)
    assert pts
    assert max(locate(hull, p).face_dim for p in pts) <= 2


def test_locate_on_every_enumerated_point():
    rng = random.Random(3)
    for _ in range(30):
        hull = random_hull(rng, 3, 4)
        pts = enumerate_lattice_points(hull)
        assert set(hull.vertices) <= set(pts)
        for p in pts:
            loc = locate(hull, p)
            assert loc.status != OUTSIDE
            assert (loc.status == VERTEX) == (p in hull.vertices)
            assert (loc.status == INTERIOR) == contains(hull, p, "open")


def test_parity_examples():
    assert parity_witness([(0, 0), (0, 1), (1, 0), (1, 1)]) is None
    assert parity_witness([(0, 0), (0, 1), (1, 0), (1, 1), (2, 0)]) == ((0, 0), (2, 0), (1, 0))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 3).flatmap(lambda d: st.lists(
    st.tuples(*[st.integers(0, 10)] * d), min_size=2 ** d + 1, max_size=2 ** d + 4, unique=True)))
def test_parity_witness_forced(pts):
    x, y, mid = parity_witness(pts)
    assert x != y and x in pts and y in pts
    assert all((a - b) % 2 == 0 for a, b in zip(x, y))
    assert mid == tuple((a + b) // 2 for a, b in zip(x, y))
    assert mid not in (x, y)
    assert contains(convex_hull(pts), mid)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)), min_size=1, max_size=4, unique=True))
def test_parity_none_iff_distinct_classes(pts):
    classes = {tuple(c % 2 for c in p) for p in pts}
    assert (parity_witness(pts) is None) == (len(classes) == len(pts))
