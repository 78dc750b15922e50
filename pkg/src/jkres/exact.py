"""Exact rational arithmetic helpers.

``fractions.Fraction`` is the rational type throughout; nothing in the
package touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .errors import DependentBasis, NotSquare, OutsideSpan

Rational = Fraction


def to_fraction(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def format_fraction(x) -> str:
    x = to_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def det(matrix: Sequence[Sequence]) -> Fraction:
    """Exact determinant by Gaussian elimination over the rationals."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise NotSquare(f"expected a square matrix, got {n} rows of lengths "
                        f"{[len(row) for row in matrix]}")
    a = [[to_fraction(x) for x in row] for row in matrix]
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if a[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        p = a[col][col]
        result *= p
        for i in range(col + 1, n):
            f = a[i][col]
            if f:
                f /= p
                row_i, row_c = a[i], a[col]
                for j in range(col + 1, n):
                    row_i[j] -= f * row_c[j]
    return sign * result


def row_echelon(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns)."""
    a = [[to_fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    if not a:
        return a, pivots
    ncols = len(a[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(a)) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        p = a[r][col]
        a[r] = [x / p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    return a, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_echelon(rows)[1]) if rows else 0


def solve_in_basis(sigma: Sequence[Sequence], w: Sequence) -> list[Fraction]:
    """Coordinates ``x`` with ``w == sum(x[i] * sigma[i])``.

    ``sigma`` must be linearly independent; ``w`` must lie in its span.
    """
    k = len(sigma)
    if k == 0:
        if any(to_fraction(x) != 0 for x in w):
            raise OutsideSpan("nonzero vector is outside the span of the empty set")
        return []
    d = len(w)
    if any(len(s) != d for s in sigma):
        raise ValueError("dimension mismatch between basis and target")
    # augmented system: columns are the sigma vectors, last column is w
    aug = [[sigma[i][j] for i in range(k)] + [w[j]] for j in range(d)]
    red, pivots = row_echelon(aug)
    if k in pivots:
        if len([p for p in pivots if p < k]) < k:
            raise DependentBasis("basis vectors are linearly dependent")
        raise OutsideSpan("target lies outside the span of the basis")
    if len(pivots) < k:
        raise DependentBasis("basis vectors are linearly dependent")
    return [red[i][k] for i in range(k)]


@lru_cache(maxsize=None)
def _todd_table(degree: int) -> tuple[Fraction, ...]:
    # (1 - e^{-t})/t = sum_k (-1)^k t^k / (k+1)!
    a = [Fraction((-1) ** k, factorial(k + 1)) for k in range(degree + 1)]
    b = [Fraction(1)]
    for k in range(1, degree + 1):
        b.append(-sum(a[j] * b[k - j] for j in range(1, k + 1)))
    return tuple(b)


def todd_coefficients(degree: int) -> list[Fraction]:
    """Coefficients b_0..b_degree of t/(1 - e^{-t}) = sum b_k t^k."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    return list(_todd_table(degree))
