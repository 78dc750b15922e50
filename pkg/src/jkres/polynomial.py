"""Sparse multivariate polynomials over a duck-typed coefficient ring.

Coefficients may be ints, Fractions, or polynomials in a *different* set of
variables (e.g. a polynomial in v whose coefficients are polynomials in
xi). Two polynomials interact as polynomials only when their variable
names agree; otherwise the other operand is treated as a scalar.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exact import format_fraction, to_fraction


def _is_poly_in(other, names) -> bool:
    return isinstance(other, MPoly) and other.names == names


class MPoly:
    __slots__ = ("names", "terms")

    def __init__(self, names: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.names = tuple(names)
        self.terms: dict[tuple[int, ...], object] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[tuple(e)] = c

    # construction -------------------------------------------------------

    @classmethod
    def zero(cls, names) -> MPoly:
        return cls(names)

    @classmethod
    def constant(cls, names, c) -> MPoly:
        names = tuple(names)
        return cls(names, {(0,) * len(names): c})

    @classmethod
    def variable(cls, names, i: int) -> MPoly:
        names = tuple(names)
        e = [0] * len(names)
        e[i] = 1
        return cls(names, {tuple(e): 1})

    @classmethod
    def gens(cls, names) -> list[MPoly]:
        return [cls.variable(names, i) for i in range(len(names))]

    @classmethod
    def linear(cls, names, coeffs: Sequence) -> MPoly:
        """The linear form sum coeffs[i] * x_i."""
        names = tuple(names)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * len(names)
                e[i] = 1
                terms[tuple(e)] = c
        return cls(names, terms)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def _const(self, c) -> MPoly:
        return MPoly.constant(self.names, c)

    # ring operations ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if _is_poly_in(other, self.names):
            return self.terms == other.terms
        if isinstance(other, MPoly):
            return False
        return self.terms == self._const(other).terms

    def __hash__(self):
        return hash((self.names, frozenset(self.terms.items())))

    def __neg__(self) -> MPoly:
        out = MPoly(self.names)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __add__(self, other) -> MPoly:
        if not _is_poly_in(other, self.names):
            if not other:
                return self
            other = self._const(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        out = MPoly(self.names)
        out.terms = terms
        return out

    __radd__ = __add__

    def __sub__(self, other) -> MPoly:
        return self + (-other)

    def __rsub__(self, other) -> MPoly:
        return (-self) + other

    def scale(self, c) -> MPoly:
        if not c:
            return MPoly(self.names)
        out = MPoly(self.names)
        terms = {}
        for e, a in self.terms.items():
            p = a * c
            if p:
                terms[e] = p
        out.terms = terms
        return out

    def __mul__(self, other) -> MPoly:
        if not _is_poly_in(other, self.names):
            return self.scale(other)
        return self.mul(other)

    def __rmul__(self, other) -> MPoly:
        if not other:
            return MPoly(self.names)
        out = MPoly(self.names)
        terms = {}
        for e, a in self.terms.items():
            p = other * a
            if p:
                terms[e] = p
        out.terms = terms
        return out

    def mul(self, other: MPoly, max_degree: int | None = None) -> MPoly:
        """Product, optionally discarding monomials of total degree > max_degree."""
        terms: dict = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            if max_degree is not None and d1 > max_degree:
                continue
            for e2, c2 in other.terms.items():
                if max_degree is not None and d1 + sum(e2) > max_degree:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        out = MPoly(self.names)
        out.terms = terms
        return out

    def __pow__(self, k: int) -> MPoly:
        if k < 0:
            raise ValueError("negative power")
        result = self._const(1)
        base = self
        while k:
            if k & 1:
                result = result.mul(base)
            k >>= 1
            if k:
                base = base.mul(base)
        return result

    # inspection ---------------------------------------------------------

    def coefficient(self, exponents: Sequence[int]):
        return self.terms.get(tuple(exponents), 0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_part(self, degree: int) -> MPoly:
        out = MPoly(self.names)
        out.terms = {e: c for e, c in self.terms.items() if sum(e) == degree}
        return out

    def truncate(self, degree: int) -> MPoly:
        out = MPoly(self.names)
        out.terms = {e: c for e, c in self.terms.items() if sum(e) <= degree}
        return out

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(e) for e in self.terms}
        if not degs:
            return True
        return len(degs) == 1 and (degree is None or degs == {degree})

    def __call__(self, *point):
        """Evaluate at a point (numbers or polynomials of another ring)."""
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = tuple(point[0])
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(point)}")
        powers: list[dict[int, object]] = [{0: 1} for _ in point]
        total = 0
        for e, c in self.terms.items():
            mono = 1
            for i, k in enumerate(e):
                if k:
                    cache = powers[i]
                    if k not in cache:
                        cache[k] = point[i] ** k
                    mono = cache[k] * mono
            # monomial on the left keeps the point's ring outermost
            total = total + mono * c
        return total

    def substitute(self, images: Sequence) -> object:
        """Replace variable i by ``images[i]`` (polynomials of a common ring)."""
        return self(*images)

    def map_coefficients(self, f) -> MPoly:
        return MPoly(self.names, {e: f(c) for e, c in self.terms.items()})

    # serialization ------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], object]]:
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), [-x for x in t[0]]))

    def to_json(self) -> list[dict]:
        return [{"exponents": list(e), "coeff": format_fraction(c)}
                for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, names, data: Iterable[Mapping]) -> MPoly:
        names = tuple(names)
        out = cls(names)
        for t in data:
            e = tuple(int(x) for x in t["exponents"])
            if len(e) != len(names):
                raise ValueError(f"exponent vector {list(e)} has wrong length")
            out = out + cls(names, {e: to_fraction(t["coeff"])})
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(self.names, e) if k)
            cs = f"({c})" if isinstance(c, MPoly) or (isinstance(c, Fraction) and c.denominator != 1) else str(c)
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts)


def var_names(prefix: str, r: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{i + 1}" for i in range(r))


class TruncSeries:
    """A polynomial with a total-degree cutoff that survives multiplication."""

    __slots__ = ("poly", "cutoff")

    def __init__(self, poly: MPoly, cutoff: int):
        self.poly = poly.truncate(cutoff)
        self.cutoff = cutoff

    def __mul__(self, other) -> TruncSeries:
        if isinstance(other, TruncSeries):
            d = min(self.cutoff, other.cutoff)
            return TruncSeries(self.poly.mul(other.poly, max_degree=d), d)
        return TruncSeries(self.poly * other, self.cutoff)

    def __add__(self, other: TruncSeries) -> TruncSeries:
        d = min(self.cutoff, other.cutoff)
        return TruncSeries(self.poly + other.poly, d)

    def __eq__(self, other) -> bool:
        return (isinstance(other, TruncSeries) and self.cutoff == other.cutoff
                and self.poly == other.poly)

    def __repr__(self) -> str:
        return f"{self.poly!r} + O(deg {self.cutoff + 1})"

    @classmethod
    def univariate_composition(cls, coeffs: Sequence, form: MPoly, cutoff: int) -> TruncSeries:
        """sum_k coeffs[k] * form^k truncated at ``cutoff`` (form homogeneous of degree 1)."""
        acc = MPoly.constant(form.names, coeffs[0]) if coeffs[0] else MPoly(form.names)
        power = MPoly.constant(form.names, 1)
        for k in range(1, min(cutoff, len(coeffs) - 1) + 1):
            power = power.mul(form)
            if coeffs[k]:
                acc = acc + power.scale(coeffs[k])
        return cls(acc, cutoff)
