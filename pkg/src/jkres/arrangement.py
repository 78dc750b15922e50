"""Linear systems of integer covectors, bases, cones and chambers.

A chamber is never enumerated globally: it is identified by the set of
bases whose open cone contains a regular point of it.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Optional, Sequence

from . import simplex
from .errors import (Infeasible, NotPointed, NotRegular,
                     NotSpanning, OutsideCone, OutsideSpan, ValidationError,
                     ZeroForm)
from .exact import det, format_fraction, rank, solve_in_basis, to_fraction


class Membership(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class Basis:
    indices: tuple[int, ...]
    absdet: int


@dataclass(frozen=True)
class LinearSystem:
    """The list of integer covectors beta_1..beta_n on an r-dimensional space.

    Use :func:`new_system` to build one; it validates the forms and finds a
    pointedness witness ``eta`` with ``<beta_a, eta> > 0`` for every ``a``.
    """

    betas: tuple[tuple[int, ...], ...]
    witness: tuple[Fraction, ...]

    @property
    def r(self) -> int:
        return len(self.betas[0])

    @property
    def n(self) -> int:
        return len(self.betas)

    @cached_property
    def bases(self) -> list[Basis]:
        return enumerate_bases(self)

    @cached_property
    def basis_index(self) -> dict[tuple[int, ...], Basis]:
        return {b.indices: b for b in self.bases}

    @cached_property
    def walls(self) -> list[tuple[int, ...]]:
        """Independent (r-1)-subsets; their cones carry every non-regular point."""
        out = []
        for tau in combinations(range(self.n), self.r - 1):
            if rank([self.betas[i] for i in tau]) == len(tau):
                out.append(tau)
        return out

    @cached_property
    def unimodular(self) -> bool:
        return all(b.absdet == 1 for b in self.bases)

    def vectors(self, indices: Sequence[int]) -> list[tuple[int, ...]]:
        return [self.betas[i] for i in indices]

    def to_json(self) -> dict:
        return {"betas": [list(b) for b in self.betas]}


def new_system(betas: Sequence[Sequence[int]]) -> LinearSystem:
    """Validate ``betas`` and return a pointed, spanning system."""
    if not betas:
        raise NotSpanning("empty system")
    rows = []
    for b in betas:
        row = []
        for x in b:
            if isinstance(x, bool) or not isinstance(x, int):
                if isinstance(x, Fraction) and x.denominator == 1:
                    x = int(x)
                else:
                    raise ValidationError(f"forms must have integer entries, got {x!r}")
            row.append(x)
        rows.append(tuple(row))
    r = len(rows[0])
    if r == 0 or any(len(row) != r for row in rows):
        raise ValidationError("all forms must have the same positive length")
    for a, row in enumerate(rows):
        if not any(row):
            raise ZeroForm(f"form {a} is zero")
    if rank(rows) < r:
        raise NotSpanning(f"forms have rank {rank(rows)} < {r}")
    eta = pointedness_witness(rows)
    if eta is None:
        raise NotPointed("forms do not lie in an open half-space")
    return LinearSystem(tuple(rows), tuple(eta))


def pointedness_witness(betas: Sequence[Sequence[int]]) -> Optional[list[Fraction]]:
    """Find eta with <beta_a, eta> >= 1 for all a, or None."""
    n, r = len(betas), len(betas[0])
    # eta = p - q with p, q >= 0 and slack s >= 0:  B p - B q - s = 1
    A = []
    for a in range(n):
        A.append(list(betas[a]) + [-x for x in betas[a]] + [-int(i == a) for i in range(n)])
    x = simplex.find_feasible(A, [1] * n)
    if x is None:
        return None
    return [x[j] - x[r + j] for j in range(r)]


def enumerate_bases(system: LinearSystem) -> list[Basis]:
    out = []
    for sigma in combinations(range(system.n), system.r):
        d = det(system.vectors(sigma))
        if d != 0:
            out.append(Basis(sigma, abs(int(d))))
    return out


def is_unimodular(system: LinearSystem) -> bool:
    return system.unimodular


def cone_contains(sigma: Sequence[Sequence], xi: Sequence) -> Membership:
    """Classify ``xi`` against the cone spanned by independent ``sigma``."""
    try:
        coords = solve_in_basis(sigma, xi)
    except OutsideSpan:
        return Membership.OUTSIDE
    if any(c < 0 for c in coords):
        return Membership.OUTSIDE
    if all(c > 0 for c in coords):
        return Membership.INTERIOR
    return Membership.BOUNDARY


def is_regular(system: LinearSystem, xi: Sequence) -> bool:
    """True iff xi lies in no cone spanned by r-1 forms of the system."""
    xi = [to_fraction(x) for x in xi]
    for tau in system.walls:
        if cone_contains(system.vectors(tau), xi) is not Membership.OUTSIDE:
            return False
    return True


def in_cone(system: LinearSystem, xi: Sequence) -> bool:
    """Exact feasibility of sum x_a beta_a = xi with x >= 0."""
    A = [[system.betas[a][j] for a in range(system.n)] for j in range(system.r)]
    return simplex.find_feasible(A, list(xi)) is not None


@dataclass(frozen=True)
class Chamber:
    """A chamber, identified by its feasible bases.

    ``representative`` is a regular point inside the chamber; equality only
    looks at the feasible-basis set.
    """

    feasible_bases: frozenset[tuple[int, ...]]
    representative: tuple[Fraction, ...] = field(compare=False)

    def contains_basis(self, indices: Sequence[int]) -> bool:
        return tuple(sorted(indices)) in self.feasible_bases

    def to_json(self) -> dict:
        return {
            "representative": [format_fraction(x) for x in self.representative],
            "feasible_bases": [list(s) for s in sorted(self.feasible_bases)],
        }


def _check_dim(system: LinearSystem, xi: Sequence) -> list[Fraction]:
    if len(xi) != system.r:
        raise ValidationError(f"xi has length {len(xi)}, expected {system.r}")
    return [to_fraction(x) for x in xi]


def chamber_of(system: LinearSystem, xi: Sequence) -> Chamber:
    xi = _check_dim(system, xi)
    if not is_regular(system, xi):
        raise NotRegular(f"{[format_fraction(x) for x in xi]} lies on a wall")
    fb = frozenset(b.indices for b in system.bases
                   if cone_contains(system.vectors(b.indices), xi) is Membership.INTERIOR)
    if not fb:
        raise OutsideCone(f"{[format_fraction(x) for x in xi]} is outside Cone(B)")
    return Chamber(fb, tuple(xi))


def default_direction(system: LinearSystem) -> list[int]:
    """delta = sum_a 2^a beta_a (0-based a), an interior direction of Cone(B)."""
    return [sum((1 << a) * system.betas[a][j] for a in range(system.n))
            for j in range(system.r)]


def _lex_sign(seq) -> int:
    for c in seq:
        if c > 0:
            return 1
        if c < 0:
            return -1
    return 0


def perturbed_chamber(system: LinearSystem, xi: Sequence,
                      direction: Optional[Sequence] = None) -> Chamber:
    """Chamber containing xi + eps*direction + eps^2 e_1 + ... + eps^(r+1) e_r.

    Signs are decided symbolically in eps (leading nonzero coefficient), so
    the answer is the chamber met by moving off xi along ``direction``
    (default: :func:`default_direction`) for all small eps > 0. The trailing
    unit-vector levels break any tie left by ``direction`` itself.
    """
    xi = _check_dim(system, xi)
    r = system.r
    if direction is None:
        direction = default_direction(system)
    direction = [to_fraction(x) for x in direction]
    units = [[Fraction(int(i == j)) for j in range(r)] for i in range(r)]
    levels = [xi, direction] + units

    fb = set()
    for b in system.bases:
        sigma = system.vectors(b.indices)
        coords = [solve_in_basis(sigma, lv) for lv in levels]
        if all(_lex_sign([c[i] for c in coords]) > 0 for i in range(r)):
            fb.add(b.indices)
    if not fb:
        raise OutsideCone("perturbed point leaves Cone(B)")
    fb = frozenset(fb)

    eps = Fraction(1)
    for _ in range(400):
        point = [sum(lv[j] * eps ** k for k, lv in enumerate(levels)) for j in range(r)]
        if is_regular(system, point):
            inside = frozenset(b.indices for b in system.bases
                               if cone_contains(system.vectors(b.indices), point)
                               is Membership.INTERIOR)
            if inside == fb:
                return Chamber(fb, tuple(point))
        eps /= 2
    raise ArithmeticError("could not locate a regular representative")


def resolve_chamber(system: LinearSystem, xi: Sequence) -> Chamber:
    """Chamber whose closure contains xi; wall points resolved by perturbation."""
    xi = _check_dim(system, xi)
    if not in_cone(system, xi):
        raise Infeasible(f"{[format_fraction(x) for x in xi]} is not in Cone(B)")
    if is_regular(system, xi):
        return chamber_of(system, xi)
    return perturbed_chamber(system, xi)
