from fractions import Fraction

from hypothesis import given, strategies as st

from jkres.polynomial import MPoly, TruncSeries

NAMES = ("x", "y")

polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
    st.fractions(max_denominator=5), max_size=5,
).map(lambda d: MPoly(NAMES, d))


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(polys, polys, st.fractions(max_denominator=5), st.fractions(max_denominator=5))
def test_evaluation_is_a_homomorphism(a, b, x, y):
    assert (a * b)(x, y) == a(x, y) * b(x, y)
    assert (a + b)(x, y) == a(x, y) + b(x, y)


def test_nested_coefficients():
    x, y = MPoly.gens(NAMES)
    s, = MPoly.gens(("s",))
    p = x * s + y  # polynomial in x, y with coefficients in Q[s]
    assert p.names == NAMES
    assert p.coefficient((1, 0)) == s
    q = p * p
    assert q.coefficient((1, 1)) == 2 * s
    assert q(1, 1) == (s + 1) * (s + 1)


def test_substitution_keeps_outer_ring():
    x, y = MPoly.gens(NAMES)
    u, w = MPoly.gens(("u", "w"))
    s, = MPoly.gens(("s",))
    p = (x * s) * y
    image = p.substitute([u + w, u - w])
    assert image.names == ("u", "w")
    assert image.coefficient((2, 0)) == s
    assert image.coefficient((0, 2)) == -s


def test_truncation_and_homogeneous_parts():
    x, y = MPoly.gens(NAMES)
    p = (1 + x + y) ** 3
    assert p.truncate(1) == 1 + 3 * x + 3 * y
    assert p.homogeneous_part(3) == (x + y) ** 3
    t = TruncSeries(1 + x, 2) * TruncSeries(1 + x + y, 2)
    assert t.poly == 1 + 2 * x + y + x * x + x * y
    assert (TruncSeries(1 + x, 5) * TruncSeries(1 + x, 2)).cutoff == 2


def test_json_round_trip():
    x, y = MPoly.gens(NAMES)
    p = Fraction(1, 3) * x * x - 2 * y + 5
    data = p.to_json()
    assert data[0] == {"exponents": [2, 0], "coeff": "1/3"}
    assert MPoly.from_json(NAMES, data) == p
