"""Brute-force oracles, deliberately independent of the package's algorithms.

Nothing here imports the hull code: facets come from scanning every
hyperplane spanned by d points, vertices from Caratheodory-style subset
solves, lattice points from bounding-box scans against those facets.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd


def _det(m):
    m = [[Fraction(x) for x in row] for row in m]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


def _rank(rows):
    m = [[Fraction(x) for x in row] for row in rows]
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def affine_rank(points):
    p0 = points[0]
    diffs = [[a - b for a, b in zip(p, p0)] for p in points[1:]]
    return _rank(diffs) if diffs else 0


def _hyperplane(pts):
    """Normal of the hyperplane through d affinely independent points (cofactor expansion)."""
    d = len(pts[0])
    p0 = pts[0]
    rows = [[a - b for a, b in zip(p, p0)] for p in pts[1:]]
    normal = []
    for j in range(d):
        minor = [[r[k] for k in range(d) if k != j] for r in rows]
        normal.append(int((-1) ** j * _det(minor)) if minor else 1)
    g = 0
    for x in normal:
        g = gcd(g, x)
    if g == 0:
        return None
    normal = [x // g for x in normal]
    return normal, sum(a * b for a, b in zip(normal, p0))


def brute_facets(points):
    """Facets (normal, offset) of a full-dimensional integer point set."""
    pts = sorted(set(map(tuple, points)))
    d = len(pts[0])
    facets = set()
    for sub in itertools.combinations(pts, d):
        h = _hyperplane(list(sub))
        if h is None:
            continue
        n, off = h
        vals = [sum(a * b for a, b in zip(n, p)) for p in pts]
        if all(v <= off for v in vals) and any(v < off for v in vals):
            facets.add((tuple(n), off))
        elif all(v >= off for v in vals) and any(v > off for v in vals):
            facets.add((tuple(-x for x in n), -off))
    return sorted(facets)


def in_convex_hull_of(p, others):
    """p is a convex combination of some affinely independent subset of ``others``."""
    p = tuple(p)
    if p in others:
        return True
    d = len(p)
    for size in range(2, min(d + 1, len(others)) + 1):
        for sub in itertools.combinations(others, size):
            if affine_rank(list(sub)) != size - 1:
                continue
            # solve p = sum l_i s_i, sum l_i = 1 in least-squares-free exact form:
            # pick size independent rows of the (d+1) x size system
            a = [[s[j] for s in sub] for j in range(d)] + [[1] * size]
            b = list(p) + [1]
            sol = _solve_overdetermined(a, b)
            if sol is not None and all(x >= 0 for x in sol):
                return True
    return False


def _solve_overdetermined(a, b):
    m = [[Fraction(x) for x in row] + [Fraction(rhs)] for row, rhs in zip(a, b)]
    n = len(a[0])
    r = 0
    pivots = []
    for c in range(n + 1):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        if c == n:
            return None  # inconsistent
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    if len(pivots) != n:
        return None
    return [m[i][n] for i in range(n)]


def brute_vertices(points):
    pts = sorted(set(map(tuple, points)))
    return [p for p in pts if not in_convex_hull_of(p, [q for q in pts if q != p])]


def box_lattice_points(points, facets):
    pts = [tuple(p) for p in points]
    lo = [min(c) for c in zip(*pts)]
    hi = [max(c) for c in zip(*pts)]
    out = []
    for z in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if all(sum(x * y for x, y in zip(n, z)) <= off for n, off in facets):
            out.append(z)
    return out


def box_interior_points(points, facets):
    pts = [tuple(p) for p in points]
    lo = [min(c) for c in zip(*pts)]
    hi = [max(c) for c in zip(*pts)]
    return [z for z in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi)))
            if all(sum(x * y for x, y in zip(n, z)) < off for n, off in facets)]


def brute_is_simplicial(points):
    verts = brute_vertices(points)
    d = len(verts[0])
    for n, off in brute_facets(verts):
        on = [v for v in verts if sum(a * b for a, b in zip(n, v)) == off]
        if len(on) != d:
            return False
    return True


def brute_width(points, v):
    vals = [sum(a * b for a, b in zip(p, v)) for p in points]
    return max(vals) - min(vals)


def primitive_box_directions(d, bound):
    """All canonical primitive v with |v|_inf <= bound."""
    for v in itertools.product(range(-bound, bound + 1), repeat=d):
        if not any(v):
            continue
        if next(x for x in v if x) < 0:
            continue
        g = 0
        for x in v:
            g = gcd(g, x)
        if g == 1:
            yield v
