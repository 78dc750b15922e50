"""Volumes, lattice-point counts, chamber polynomials, Ehrhart polynomials
and toric intersection numbers of partition polytopes."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from . import oracle
from .arrangement import Chamber, LinearSystem, in_cone, resolve_chamber
from .errors import Infeasible, NonUnimodular, ValidationError
from .exact import format_fraction, to_fraction
from .polynomial import MPoly
from .residue import (ArrFraction, jk_residue, symbolic_xi, todd_product_truncation,
                      v_names, xi_names)


class Kind(enum.Enum):
    VOLUME = "volume"
    COUNT = "count"


@dataclass(frozen=True)
class PartitionPolytope:
    """P_B(xi) = {x >= 0 : sum x_a beta_a = xi}."""

    system: LinearSystem
    xi: tuple[Fraction, ...]

    @property
    def feasible(self) -> bool:
        return in_cone(self.system, self.xi)

    @property
    def dimension(self) -> int:
        return self.system.n - self.system.r

    def volume(self) -> Fraction:
        return volume(self.system, self.xi)

    def count(self) -> int:
        return count(self.system, self.xi)


@dataclass(frozen=True)
class ChamberPolynomial:
    chamber: Chamber
    poly: MPoly
    kind: Kind

    def __call__(self, xi: Sequence):
        return self.poly(*[to_fraction(x) for x in xi])

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "chamber": self.chamber.to_json(),
                "variables": list(self.poly.names), "terms": self.poly.to_json()}


@dataclass(frozen=True)
class EhrhartPolynomial:
    """E(t) = sum_i e_i t^(d-i); ``coefficients`` holds e_0..e_d (high to low)."""

    coefficients: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Fraction:
        return self.coefficients[0]

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in self.coefficients:
            acc = acc * t + c
        return acc

    def to_json(self) -> list[str]:
        return [format_fraction(c) for c in self.coefficients]


def _xi(system: LinearSystem, xi) -> list[Fraction]:
    if len(xi) != system.r:
        raise ValidationError(f"xi has length {len(xi)}, expected {system.r}")
    return [to_fraction(x) for x in xi]


def _require_unimodular(system: LinearSystem) -> None:
    if not system.unimodular:
        raise NonUnimodular("residue counting needs every basis to have |det| = 1; "
                            "use the dynamic-programming oracle instead")


def _as_poly(value, names) -> MPoly:
    if isinstance(value, MPoly):
        return value
    return MPoly.constant(names, value)


def _volume_fraction(system: LinearSystem, xi) -> ArrFraction:
    d = system.n - system.r
    form = MPoly.linear(v_names(system.r), xi)
    return ArrFraction(form ** d * Fraction(1, factorial(d)), (1,) * system.n)


def _count_fraction(system: LinearSystem, xi) -> ArrFraction:
    d = system.n - system.r
    numer = todd_product_truncation(system, xi, d).poly.homogeneous_part(d)
    return ArrFraction(numer, (1,) * system.n)


def volume(system: LinearSystem, xi: Sequence) -> Fraction:
    """Lattice-normalized volume of P_B(xi); 0 when xi is outside Cone(B)."""
    xi = _xi(system, xi)
    if not in_cone(system, xi):
        return Fraction(0)
    chamber = resolve_chamber(system, xi)
    return Fraction(jk_residue(_volume_fraction(system, xi), chamber, system))


def volume_polynomial(system: LinearSystem, chamber: Chamber) -> ChamberPolynomial:
    names = xi_names(system.r)
    value = jk_residue(_volume_fraction(system, symbolic_xi(system.r)), chamber, system)
    return ChamberPolynomial(chamber, _as_poly(value, names), Kind.VOLUME)


def count(system: LinearSystem, xi: Sequence) -> int:
    """Number of lattice points of P_B(xi) through the residue formula."""
    point = oracle.integral_point(_xi(system, xi))
    _require_unimodular(system)
    if not in_cone(system, point):
        return 0
    chamber = resolve_chamber(system, point)
    value = Fraction(jk_residue(_count_fraction(system, point), chamber, system))
    if value.denominator != 1:
        raise ArithmeticError(f"residue count {value} is not an integer")
    return value.numerator


def count_polynomial(system: LinearSystem, chamber: Chamber) -> ChamberPolynomial:
    _require_unimodular(system)
    names = xi_names(system.r)
    value = jk_residue(_count_fraction(system, symbolic_xi(system.r)), chamber, system)
    return ChamberPolynomial(chamber, _as_poly(value, names), Kind.COUNT)


def ehrhart(system: LinearSystem, xi: Sequence) -> EhrhartPolynomial:
    """Number of lattice points of t * P_B(xi) as a polynomial in t.

    Unimodular systems go through the residue formula with xi replaced by
    t * xi; otherwise the polynomial is interpolated from brute-force counts
    at t = 0..n-r (a quasi-polynomial is reduced to that single piece).
    """
    point = oracle.integral_point(_xi(system, xi))
    if not in_cone(system, point):
        raise Infeasible("xi is outside Cone(B)")
    d = system.n - system.r
    if system.unimodular:
        chamber = resolve_chamber(system, point)
        t = MPoly.variable(("t",), 0)
        value = jk_residue(_count_fraction(system, [t * x for x in point]), chamber, system)
        poly = _as_poly(value, ("t",))
        low_to_high = [Fraction(poly.coefficient((k,))) for k in range(d + 1)]
    else:
        values = [oracle.dp_count(system, [k * x for x in point]) for k in range(d + 1)]
        low_to_high = oracle.interpolate(values)
    return EhrhartPolynomial(tuple(reversed(low_to_high)))


def toric_integral(system: LinearSystem, chamber: Chamber, p: MPoly) -> Fraction:
    """Integral over the toric quotient N_c of the class of p (a polynomial in phi)."""
    if p.nvars != system.r:
        raise ValidationError(f"polynomial must have {system.r} variables")
    p = MPoly(v_names(system.r), p.terms)
    return Fraction(jk_residue(ArrFraction(p, (1,) * system.n), chamber, system))
