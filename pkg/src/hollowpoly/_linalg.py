"""Small exact linear algebra over the rationals.

Everything here works on lists of ints/Fractions and never touches floats.
Matrices are tiny (at most a few dozen rows, ambient dimension <= ~7), so
plain Gauss-Jordan with ``Fraction`` is fast enough.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Sequence


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def sub(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(a - b for a, b in zip(u, v))


def vec_gcd(v: Sequence[int]) -> int:
    return reduce(gcd, (abs(x) for x in v), 0)


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    g = vec_gcd(v)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in v)


def clear_denominators(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Smallest positive integer multiple of a rational vector, made primitive."""
    lcm = 1
    for x in v:
        den = Fraction(x).denominator
        lcm = lcm * den // gcd(lcm, den)
    return primitive([int(Fraction(x) * lcm) for x in v])


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(row) for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            mi = m[i]
            f = mi[c]
            mi[:] = [(p * a - f * b) // prev for a, b in zip(mi, m[r])]
        prev = p
        r += 1
        if r == len(m):
            break
    return r


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[tuple[int, ...]]:
    """Primitive integer basis of {x : rows @ x = 0}."""
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(clear_denominators(x))
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Unique solution of a square system, or None if singular."""
    n = len(a)
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return [red[i][n] for i in range(n)]
