"""Dense tableau simplex over ``Fraction`` with Bland's rule.

Only the case the width code needs: maximize ``c.x`` subject to
``A x <= b``, ``x >= 0`` with ``b >= 0``, so the slack basis is feasible
and no phase one is required.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class UnboundedLP(ArithmeticError):
    pass


def maximize(c: Sequence, a: Sequence[Sequence], b: Sequence) -> tuple[Fraction, list[Fraction]]:
    m, n = len(a), len(c)
    if any(x < 0 for x in b):
        raise ValueError("origin must be feasible (b >= 0)")
    # rows: [A | I | b]; objective row holds reduced costs -c
    t = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(m)] + [Fraction(rhs)]
         for i, (row, rhs) in enumerate(zip(a, b))]
    obj = [Fraction(-x) for x in c] + [Fraction(0)] * (m + 1)
    basis = list(range(n, n + m))
    while True:
        # Bland: lowest-index column with negative reduced cost
        col = next((j for j in range(n + m) if obj[j] < 0), None)
        if col is None:
            break
        best = None
        for i in range(m):
            if t[i][col] > 0:
                ratio = t[i][-1] / t[i][col]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise UnboundedLP("objective is unbounded")
        r = best[1]
        piv = t[r][col]
        t[r] = [x / piv for x in t[r]]
        for i in range(m):
            if i != r and t[i][col] != 0:
                f = t[i][col]
                t[i] = [x - f * y for x, y in zip(t[i], t[r])]
        f = obj[col]
        obj = [x - f * y for x, y in zip(obj, t[r])]
        basis[r] = col
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = t[i][-1]
    return obj[-1], x
