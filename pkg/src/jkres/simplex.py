"""Exact phase-one simplex with Bland's rule.

Only feasibility is needed by the rest of the package: decide whether
``A x = b, x >= 0`` has a solution and return one.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .exact import to_fraction


def find_feasible(A: Sequence[Sequence], b: Sequence) -> Optional[list[Fraction]]:
    """Return a basic feasible ``x >= 0`` with ``A x == b`` or None."""
    m = len(A)
    n = len(A[0]) if m else 0
    rows = []
    rhs = []
    for i in range(m):
        row = [to_fraction(x) for x in A[i]]
        bi = to_fraction(b[i])
        if bi < 0:
            row = [-x for x in row]
            bi = -bi
        rows.append(row)
        rhs.append(bi)
    # tableau columns: n originals then m artificials
    width = n + m
    tab = [rows[i] + [Fraction(int(i == j)) for j in range(m)] + [rhs[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    # objective: minimise the sum of artificials; reduced costs over originals
    obj = [Fraction(0)] * (width + 1)
    for i in range(m):
        for j in range(n):
            obj[j] -= tab[i][j]
        obj[width] -= tab[i][width]
    while True:
        # Bland: smallest index with negative reduced cost enters
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        best = None
        leave = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][width] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:  # unbounded phase-one objective cannot happen
            raise ArithmeticError("phase-one objective unbounded")
        _pivot(tab, obj, leave, enter)
        basis[leave] = enter
    if obj[width] != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = tab[i][width]
    return x


def _pivot(tab, obj, row, col):
    p = tab[row][col]
    tab[row] = [x / p for x in tab[row]]
    prow = tab[row]
    for i, other in enumerate(tab):
        if i != row and other[col] != 0:
            f = other[col]
            tab[i] = [x - f * y for x, y in zip(other, prow)]
    if obj[col] != 0:
        f = obj[col]
        obj[:] = [x - f * y for x, y in zip(obj, prow)]
