"""Brute-force references: dynamic-programming counts and Ehrhart
interpolation. Nothing here goes through partial fractions or residues."""
from __future__ import annotations

import os
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Sequence

from .arrangement import LinearSystem
from .errors import BudgetExceeded, NotIntegral, ValidationError
from .exact import row_echelon, to_fraction

DEFAULT_BUDGET = 10 ** 7


def default_budget() -> int:
    env = os.environ.get("JKRES_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValidationError(f"JKRES_BUDGET must be an integer, got {env!r}") from None
    return DEFAULT_BUDGET


def integral_point(xi: Sequence) -> tuple[int, ...]:
    out = []
    for x in xi:
        f = to_fraction(x)
        if f.denominator != 1:
            raise NotIntegral(f"{x} is not an integer")
        out.append(f.numerator)
    return tuple(out)


def _integer_witness(system: LinearSystem) -> tuple[int, ...]:
    den = lcm(*(x.denominator for x in system.witness))
    return tuple(int(x * den) for x in system.witness)


def cone_facets(system: LinearSystem) -> list[tuple[int, ...]]:
    """Integer inner normals y of the facets of Cone(B): Cone(B) = {<., y> >= 0}."""
    r = system.r
    normals = set()
    for tau in combinations(range(system.n), r - 1):
        y = _normal(system.vectors(tau), r)
        if y is None:
            continue
        heights = [sum(b * c for b, c in zip(beta, y)) for beta in system.betas]
        if all(h >= 0 for h in heights):
            normals.add(y)
        elif all(h <= 0 for h in heights):
            normals.add(tuple(-c for c in y))
    return sorted(normals)


def _normal(vectors, r: int):
    """Primitive integer generator of the orthogonal complement, if it is a line."""
    if vectors:
        red, pivots = row_echelon(vectors)
    else:
        red, pivots = [], []
    if len(pivots) != r - 1:
        return None
    free = next(j for j in range(r) if j not in pivots)
    y = [Fraction(0)] * r
    y[free] = Fraction(1)
    for row, p in zip(red, pivots):
        y[p] = -row[free]
    den = lcm(*(c.denominator for c in y))
    ints = [int(c * den) for c in y]
    g = gcd(*ints)
    return tuple(c // g for c in ints)


def dp_count(system: LinearSystem, xi: Sequence, budget: int | None = None) -> int:
    """Number of x in Z_{>=0}^n with sum x_a beta_a == xi, by exhaustive DP.

    The table lives on the semigroup points eta with xi - eta in Cone(B);
    that set is closed under eta -> eta - beta_a inside the semigroup, so
    the unbounded-knapsack update f(eta) += f(eta - beta_a), done in order
    of increasing height, counts representations with beta_0..beta_a.
    """
    if budget is None:
        budget = default_budget()
    target = integral_point(xi)
    if len(target) != system.r:
        raise ValidationError(f"xi has length {len(target)}, expected {system.r}")
    facets = cone_facets(system)

    def below_target(p) -> bool:
        return all(sum((t - x) * c for t, x, c in zip(target, p, y)) >= 0 for y in facets)

    origin = (0,) * system.r
    if not below_target(origin):
        return 0
    gens = sorted(set(system.betas))
    region = {origin}
    frontier = [origin]
    while frontier:
        nxt = []
        for p in frontier:
            for b in gens:
                q = tuple(x + y for x, y in zip(p, b))
                if q not in region and below_target(q):
                    region.add(q)
                    nxt.append(q)
        if len(region) > budget:
            raise BudgetExceeded(f"DP table exceeded {budget} entries")
        frontier = nxt
    if target not in region:
        return 0
    w = _integer_witness(system)
    order = sorted(region, key=lambda p: sum(x * c for x, c in zip(p, w)))
    table = dict.fromkeys(order, 0)
    table[origin] = 1
    for beta in system.betas:
        get = table.get
        for p in order:
            prev = get(tuple(x - y for x, y in zip(p, beta)))
            if prev:
                table[p] += prev
    return table[target]


def interpolate(values: Sequence, nodes: Sequence | None = None) -> list[Fraction]:
    """Coefficients (low to high) of the polynomial through (nodes[i], values[i])."""
    if nodes is None:
        nodes = range(len(values))
    xs = [to_fraction(x) for x in nodes]
    ys = [to_fraction(y) for y in values]
    m = len(xs)
    # Newton divided differences, then expand
    coef = list(ys)
    for j in range(1, m):
        for i in range(m - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * m
    for i in range(m - 1, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        shifted = [Fraction(0)] + poly[:-1]
        poly = [s - xs[i] * p for s, p in zip(shifted, poly)]
        poly[0] += coef[i]
    return poly


def interpolation_stride(system: LinearSystem) -> int:
    return lcm(*(b.absdet for b in system.bases))


def oracle_ehrhart(system: LinearSystem, xi: Sequence, budget: int | None = None) -> list[Fraction]:
    """Coefficients (low to high, in t) interpolated from dp_count(t * stride * xi)."""
    point = integral_point(xi)
    d = system.n - system.r
    s = interpolation_stride(system)
    values = [dp_count(system, [s * k * x for x in point], budget) for k in range(d + 1)]
    in_k = interpolate(values)
    # substitute k = t / s
    return [c / Fraction(s) ** i for i, c in enumerate(in_k)]


def oracle_volume(system: LinearSystem, xi: Sequence, budget: int | None = None) -> Fraction:
    """Leading Ehrhart coefficient of t -> dp_count(t * xi) (lattice-normalized volume)."""
    coeffs = oracle_ehrhart(system, xi, budget)
    return coeffs[system.n - system.r]
