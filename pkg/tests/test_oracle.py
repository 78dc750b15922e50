import random
from fractions import Fraction
from itertools import product

import pytest

from jkres import corpus
from jkres.arrangement import new_system
from jkres.errors import BudgetExceeded, NotIntegral
from jkres.models import kostant_system
from jkres.oracle import cone_facets, dp_count, interpolate, oracle_ehrhart, oracle_volume


def enumerate_count(system, xi):
    """Naive count over the box 0 <= x_a <= <xi, w> / <beta_a, w>."""
    w = system.witness
    height = sum(x * c for x, c in zip(xi, w))
    bounds = [int(height / sum(b * c for b, c in zip(beta, w))) for beta in system.betas]
    return sum(1 for x in product(*(range(k + 1) for k in bounds))
               if all(sum(x[a] * system.betas[a][j] for a in range(system.n)) == xi[j]
                      for j in range(system.r)))


def series_coefficient(a, b):
    """Coefficient of q1^a q2^b in (1-q1)^-3 (1-q2)^-3 (1-q1 q2)^-3."""
    def c3(k):  # coefficient of q^k in (1-q)^-3
        return (k + 1) * (k + 2) // 2
    return sum(c3(a - k) * c3(b - k) * c3(k) for k in range(min(a, b) + 1))


def test_dp_examples(paper):
    assert dp_count(new_system([[1], [1]]), [7]) == 8
    assert dp_count(paper, [1, 1]) == 12 == series_coefficient(1, 1)
    assert dp_count(kostant_system(2), [1, 1]) == 2


def test_dp_matches_series(paper):
    for a in range(6):
        for b in range(6):
            assert dp_count(paper, [a, b]) == series_coefficient(a, b)


def test_dp_matches_naive_enumeration():
    rng = random.Random(5)
    for s in corpus.general_corpus(10, seed=5):
        if s.n > 5:
            continue
        for xi in corpus.sample_lattice_points(s, rng, 2, max_coeff=2):
            assert dp_count(s, xi) == enumerate_count(s, xi)


def test_dp_order_independent():
    rng = random.Random(6)
    for s in corpus.unimodular_corpus(10, seed=6):
        perm = list(range(s.n))
        rng.shuffle(perm)
        t = new_system([s.betas[p] for p in perm])
        for xi in corpus.sample_lattice_points(s, rng, 2):
            assert dp_count(s, xi) == dp_count(t, xi)


def test_dp_zero_outside_semigroup():
    s = new_system([[2], [3]])
    assert [dp_count(s, [k]) for k in range(8)] == [1, 0, 1, 1, 1, 1, 2, 1]
    assert dp_count(s, [-4]) == 0
    tri = new_system([[1, 0], [0, 1], [1, 1]])
    assert dp_count(tri, [-1, 3]) == 0


def test_dp_budget_and_integrality():
    with pytest.raises(BudgetExceeded):
        dp_count(new_system([[1], [1]]), [100], budget=10)
    with pytest.raises(NotIntegral):
        dp_count(new_system([[1], [1]]), [Fraction(1, 2)])


def test_dp_budget_env(monkeypatch):
    monkeypatch.setenv("JKRES_BUDGET", "5")
    with pytest.raises(BudgetExceeded):
        dp_count(new_system([[1], [1]]), [50])


def test_cone_facets():
    assert cone_facets(new_system([[1, 0], [0, 1], [1, 1]])) == [(0, 1), (1, 0)]
    assert cone_facets(new_system([[-1], [-2]])) == [(-1,)]


def test_interpolate():
    assert interpolate([1, 3, 6, 10]) == [1, Fraction(3, 2), Fraction(1, 2), 0]
    assert interpolate([5, 8], nodes=[1, 2]) == [2, 3]


def test_oracle_volume_examples():
    assert oracle_volume(new_system([[1], [1]]), [5]) == 5
    assert oracle_volume(new_system([[1], [1], [1]]), [1]) == Fraction(1, 2)
    assert oracle_volume(new_system([[1]]), [4]) == 1


def test_oracle_ehrhart_non_unimodular_stride():
    s = new_system([[1], [2]])
    # N(t) = floor(t/2) + 1 ; on even t the piece is t/2 + 1
    assert oracle_ehrhart(s, [1]) == [1, Fraction(1, 2)]
    assert oracle_volume(s, [1]) == Fraction(1, 2)
