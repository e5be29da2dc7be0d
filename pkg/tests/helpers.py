"""Seeded generators for random test polytopes."""

import random

from hollowpoly.classify import is_hollow, is_simplicial
from hollowpoly.exactgeo import convex_hull


def random_points(rng, d, m, n):
    pts = set()
    while len(pts) < n:
        pts.add(tuple(rng.randint(0, m) for _ in range(d)))
    return sorted(pts)


def random_hull(rng, d, m, n_min=None, n_max=None):
    """A random full-dimensional hull with vertices in [0, m]^d."""
    n_min = n_min or d + 1
    n_max = n_max or 2 * d + 2
    while True:
        hull = convex_hull(random_points(rng, d, m, rng.randint(n_min, n_max)))
        if hull.full_dimensional:
            return hull


def random_hollow(rng, d, m, **kw):
    while True:
        hull = random_hull(rng, d, m, **kw)
        if is_hollow(hull):
            return hull


def random_hollow_simplicial(rng, d, m, **kw):
    while True:
        hull = random_hollow(rng, d, m, **kw)
        if is_simplicial(hull):
            return hull


def hollow_simplicial_family(seed, d, m, count):
    rng = random.Random(seed)
    return [random_hollow_simplicial(rng, d, m) for _ in range(count)]
