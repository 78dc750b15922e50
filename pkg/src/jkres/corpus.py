"""Seeded random systems and fractions used by the property tests and the
embedded self-test."""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .arrangement import LinearSystem, new_system, pointedness_witness
from .exact import det, rank
from .polynomial import MPoly
from .residue import ArrFraction, v_names

PAPER_BETAS = [[1, 0]] * 3 + [[0, 1]] * 3 + [[1, 1]] * 3


def paper_system() -> LinearSystem:
    """e1, e2 and e1+e2, each three times."""
    return new_system(PAPER_BETAS)


def g(a, b) -> Fraction:
    """Closed form of the coefficient of q1^a q2^b for a >= b."""
    a, b = Fraction(a), Fraction(b)
    return ((b + 1) * (b + 2) * (b + 3) * (b + 4) * (b + 5)
            * (7 * a * a - 7 * a * b + 2 * b * b + 21 * a - 9 * b + 14) / 1680)


def g_polynomial(swap: bool = False) -> MPoly:
    a, b = MPoly.gens(("xi1", "xi2"))
    if swap:
        a, b = b, a
    p = (b + 1).mul(b + 2).mul(b + 3).mul(b + 4).mul(b + 5)
    return p.mul(7 * a * a - 7 * a * b + 2 * b * b + 21 * a - 9 * b + 14).scale(Fraction(1, 1680))


def _unimodular_with(vectors, candidate) -> bool:
    r = len(candidate)
    for rest in combinations(vectors, r - 1):
        if abs(det(list(rest) + [candidate])) > 1:
            return False
    return True


def random_system(rng: random.Random, r: int, n: int, unimodular: bool = True,
                  low: int = -2, high: int = 2, tries: int = 400) -> Optional[LinearSystem]:
    """Rejection-sample a pointed spanning system, one form at a time."""
    vectors: list[tuple[int, ...]] = []
    for _ in range(tries):
        if len(vectors) == n:
            break
        cand = tuple(rng.randint(low, high) for _ in range(r))
        if not any(cand):
            continue
        if unimodular and not _unimodular_with(vectors, cand):
            continue
        if pointedness_witness(vectors + [cand]) is None:
            continue
        vectors.append(cand)
    if len(vectors) < n or rank(vectors) < r:
        return None
    return new_system(vectors)


def unimodular_corpus(count: int, seed: int = 0, max_r: int = 3, max_n: int = 8) -> list[LinearSystem]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        r = rng.randint(1, max_r)
        n = rng.randint(r, max_n)
        s = random_system(rng, r, n)
        if s is not None:
            out.append(s)
    return out


def general_corpus(count: int, seed: int = 0) -> list[LinearSystem]:
    """Pointed systems without the unimodularity filter."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        r = rng.randint(2, 3)
        n = rng.randint(r + 1, r + 3)
        s = random_system(rng, r, n, unimodular=False)
        if s is not None:
            out.append(s)
    return out


def sample_lattice_points(system: LinearSystem, rng: random.Random, k: int,
                          max_coeff: int = 2) -> list[tuple[int, ...]]:
    """Random nonnegative integer combinations of the forms (never empty polytopes)."""
    pts = []
    for _ in range(k):
        xs = [rng.randint(0, max_coeff) for _ in range(system.n)]
        pts.append(tuple(sum(x * b[j] for x, b in zip(xs, system.betas))
                         for j in range(system.r)))
    return pts


def random_homogeneous(rng: random.Random, r: int, degree: int, terms: int = 3) -> MPoly:
    names = v_names(r)
    p = MPoly(names)
    for _ in range(terms):
        e = [0] * r
        for _ in range(degree):
            e[rng.randrange(r)] += 1
        p = p + MPoly(names, {tuple(e): Fraction(rng.randint(-5, 5), rng.randint(1, 3))})
    return p


def random_fraction(system: LinearSystem, rng: random.Random,
                    degree_shift: int = 0) -> ArrFraction:
    """Random fraction of homogeneity degree -r + degree_shift."""
    mult = [rng.randint(0, 2) for _ in range(system.n)]
    if sum(mult) < system.r:
        for i in rng.sample(range(system.n), system.r):
            mult[i] += 1
    deg = sum(mult) - system.r + degree_shift
    if deg < 0:
        mult[0] += -deg
        deg = 0
    return ArrFraction(random_homogeneous(rng, system.r, deg), tuple(mult))
