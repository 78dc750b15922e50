import json
import random
from fractions import Fraction

import pytest

from jkres import corpus
from jkres.arrangement import chamber_of, is_regular, new_system, resolve_chamber
from jkres.exact import rank
from jkres.errors import ValidationError
from jkres.polynomial import MPoly
from jkres.residue import (ArrFraction, check_decomposition, iterated_residue, jk_residue,
                           linear_form, partial_fractions, reduce_denominator,
                           todd_product_truncation, v_names, xi_names)


def gens(r):
    return MPoly.gens(v_names(r))


def as_rational_function(system, fractions):
    """Numerator over the common denominator prod beta_a^top (for comparisons)."""
    top = [max(f.mult[a] for f in fractions) for a in range(system.n)]
    total = MPoly(v_names(system.r))
    for f in fractions:
        p = f.numerator
        for a in range(system.n):
            if top[a] - f.mult[a]:
                p = p * linear_form(system, a) ** (top[a] - f.mult[a])
        total = total + p
    return total, top


def same_function(system, lhs, rhs):
    top = [max(f.mult[a] for f in lhs + rhs) for a in range(system.n)]
    pad = ArrFraction(MPoly(v_names(system.r)), tuple(top))
    return as_rational_function(system, lhs + [pad])[0] == as_rational_function(system, rhs + [pad])[0]


def test_partial_fractions_circuit_example(triangle):
    out = partial_fractions(ArrFraction.of(triangle, 1, [1, 1, 1]), triangle, verify=True)
    assert {f.mult: f.numerator for f in out} == {(0, 1, 2): 1, (1, 0, 2): 1}


def test_partial_fractions_independent_is_untouched(triangle):
    f = ArrFraction.of(triangle, 1, [1, 1, 0])
    assert partial_fractions(f, triangle) == [f]


def test_partial_fractions_with_numerator(triangle):
    v1, v2 = gens(2)
    a, b = Fraction(3), Fraction(-5, 2)
    f = ArrFraction.of(triangle, a * v1 + b * v2, [1, 1, 1])
    out = partial_fractions(f, triangle, verify=True)
    assert all(len(g.support) <= 2 for g in out)
    expected = [ArrFraction.of(triangle, a, [0, 1, 1]), ArrFraction.of(triangle, b, [1, 0, 1])]
    assert same_function(triangle, out, [f])
    assert same_function(triangle, expected, [f])


def test_partial_fractions_random_identity_and_trace():
    rng = random.Random(1)
    for s in corpus.general_corpus(8, seed=1):
        for _ in range(3):
            mult = tuple(rng.randint(0, 3) for _ in range(s.n))
            trace = []
            pieces = reduce_denominator(s, mult, trace=trace)
            check_decomposition(s, mult, pieces)
            for m in pieces:
                support = [a for a in range(s.n) if m[a]]
                assert rank(s.vectors(support)) == len(support)
            assert all({"mult", "pivot", "relation"} <= set(step) for step in trace)
            json.dumps(trace)


def test_jk_examples(triangle):
    c = chamber_of(triangle, [3, 2])
    v1, v2 = gens(2)
    assert jk_residue(ArrFraction.of(triangle, 1, [1, 1, 0]), c, triangle) == 1
    assert jk_residue(ArrFraction.of(triangle, 1, [0, 1, 1]), c, triangle) == 0
    assert jk_residue(ArrFraction.of(triangle, v2, [1, 0, 2]), c, triangle) == 1
    for xi in ([3, 2], [2, 3]):
        assert jk_residue(ArrFraction.of(triangle, 1, [1, 1, 1]), chamber_of(triangle, xi), triangle) == 0


def test_jk_axiom_with_determinant():
    s = new_system([[1, 0], [1, 2], [0, 1]])
    c = chamber_of(s, [2, 3])
    # (0,1) spans a cone of index 2 containing (2,3)
    assert jk_residue(ArrFraction.of(s, 1, [1, 1, 0]), c, s) == Fraction(1, 2)
    assert jk_residue(ArrFraction.of(s, 1, [0, 1, 1]), c, s) == 0
    assert jk_residue(ArrFraction.of(s, 1, [1, 0, 1]), c, s) == 1


def test_jk_sum_of_fractions(triangle):
    c = chamber_of(triangle, [3, 2])
    v1, v2 = gens(2)
    terms = [ArrFraction.of(triangle, 2, [1, 1, 0]), ArrFraction.of(triangle, 3 * v2, [1, 0, 2])]
    assert jk_residue(terms, c, triangle) == 5


def test_circuit_choice_does_not_matter():
    rng = random.Random(2)
    for s in corpus.general_corpus(6, seed=2):
        xi = [sum((a + 1) * b[j] for a, b in enumerate(s.betas)) for j in range(s.r)]
        c = resolve_chamber(s, xi)
        f = corpus.random_fraction(s, rng)
        base = jk_residue(f, c, s)
        assert all(jk_residue(f, c, s, rng=random.Random(seed)) == base for seed in range(5))


def test_iterated_residue_examples(triangle):
    v1, v2 = gens(2)
    assert iterated_residue(triangle, (0, 1), ArrFraction.of(triangle, 1, [1, 1, 0])) == 1
    assert iterated_residue(triangle, (0, 2), ArrFraction.of(triangle, v2, [1, 0, 2])) == 1
    assert iterated_residue(triangle, (0, 1), ArrFraction.of(triangle, v1, [2, 1, 0])) == 1
    with pytest.raises(ValidationError):
        iterated_residue(triangle, (0, 1), ArrFraction.of(triangle, 1, [1, 0, 1]))


def test_iterated_residue_agrees_with_terminal_rule():
    rng = random.Random(3)
    for s in corpus.general_corpus(8, seed=3):
        for basis in s.bases:
            xi = [sum(b[j] for b in s.vectors(basis.indices)) for j in range(s.r)]
            mult = [0] * s.n
            for i in basis.indices:
                mult[i] = rng.randint(1, 3)
            num = corpus.random_homogeneous(rng, s.r, sum(mult) - s.r)
            f = ArrFraction(num, tuple(mult))
            if not is_regular(s, xi):
                continue
            c = chamber_of(s, xi)
            assert basis.indices in c.feasible_bases
            assert jk_residue(f, c, s) == iterated_residue(s, basis.indices, f)


def test_todd_product_truncation_examples():
    one = new_system([[1]])
    (v,) = gens(1)
    assert todd_product_truncation(one, [0], 2).poly == 1 + Fraction(1, 2) * v + Fraction(1, 12) * v * v
    two = new_system([[1], [1]])
    (xi,) = MPoly.gens(xi_names(1))
    assert todd_product_truncation(two, None, 1).poly == 1 + v * (xi + 1)
    s = new_system([[1, 0], [0, 1], [1, 1]])
    assert todd_product_truncation(s, [3, 4], 0).poly == 1


def test_verify_mode_is_on_in_tests(triangle):
    from jkres import residue
    assert residue.VERIFY
    partial_fractions(ArrFraction.of(triangle, 1, [2, 1, 3]), triangle)
