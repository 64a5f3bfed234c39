from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import graphs_st, random_graph
from toughore.conditions import (
    BoundKind,
    Verdict,
    check_lemma1,
    compare_bauer_bound,
    compare_dirac_bound,
    compare_main_bound,
    compare_ore_bound,
    independence_naive_oracle,
    independence_number,
    min_degree,
    sigma2,
)
from toughore.cycles import hamilton_cycle
from toughore.errors import PreconditionError
from toughore.generate import graphs
from toughore.graph import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    from_edges,
    petersen_graph,
)
from toughore.rational import INF


def test_sigma2_examples():
    assert sigma2(complete_bipartite(2, 3)) == 4
    assert sigma2(complete_graph(5)) is INF
    assert sigma2(petersen_graph()) == 6


def test_min_degree_examples():
    assert min_degree(complete_bipartite(2, 3)) == 2
    assert min_degree(cycle_graph(7)) == 2
    assert min_degree(empty_graph(3)) == 0


def test_main_bound_examples():
    eq = compare_main_bound(4, Fraction(2, 3), 5)
    assert eq.verdict is Verdict.EQUAL and eq.bound == 4 and eq.rhs_kind is BoundKind.MAIN
    gt = compare_main_bound(4, 1, 5)
    assert gt.verdict is Verdict.GREATER and gt.bound == 3
    assert compare_main_bound(3, 0, 6).verdict is Verdict.VACUOUS
    assert compare_main_bound(INF, INF, 5).verdict is Verdict.VACUOUS
    assert compare_main_bound(6, Fraction(4, 3), 10).bound == Fraction(46, 7)


def test_other_bounds():
    assert compare_bauer_bound(2, Fraction(2, 3), 5).verdict is Verdict.EQUAL
    assert compare_bauer_bound(2, 1, 5).verdict is Verdict.GREATER
    assert compare_ore_bound(5, 5).verdict is Verdict.EQUAL
    assert compare_ore_bound(4, 5).verdict is Verdict.LESS
    assert compare_dirac_bound(3, 6).verdict is Verdict.EQUAL
    assert compare_dirac_bound(2, 5).verdict is Verdict.LESS
    assert compare_dirac_bound(4, 5, complete=True).verdict is Verdict.VACUOUS


@given(
    st.integers(0, 40),
    st.fractions(min_value=Fraction(1, 50), max_value=5),
    st.fractions(min_value=Fraction(1, 50), max_value=5),
    st.integers(3, 30),
)
def test_main_bound_antitone(sigma, t1, t2, n):
    lo, hi = sorted((t1, t2))
    # a larger t lowers the bound, so the verdict can only move up
    order = {Verdict.LESS: 0, Verdict.EQUAL: 1, Verdict.GREATER: 2}
    assert order[compare_main_bound(sigma, lo, n).verdict] <= order[compare_main_bound(sigma, hi, n).verdict]


@given(st.integers(0, 40), st.fractions(min_value=Fraction(1, 50), max_value=5), st.integers(3, 30))
def test_main_bound_matches_fraction_arithmetic(sigma, t, n):
    bound = Fraction(2 * n) / (t + 1) - 2
    expected = Verdict.GREATER if sigma > bound else Verdict.EQUAL if sigma == bound else Verdict.LESS
    assert compare_main_bound(sigma, t, n).verdict is expected


@given(graphs_st(min_n=2, max_n=10))
def test_sigma2_at_least_twice_min_degree(g):
    if not g.is_complete():
        assert sigma2(g) >= 2 * min_degree(g)


def test_independence_against_oracle(rng):
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 13))
        alpha, mis = independence_number(g)
        assert alpha == independence_naive_oracle(g) == len(mis)
        assert g.is_independent(sum(1 << v for v in mis))


@pytest.mark.parametrize(
    "g, alpha, bound, tight",
    [
        (complete_bipartite(2, 3), 3, Fraction(3), True),
        (cycle_graph(6), 3, Fraction(3), True),
        (petersen_graph(), 4, Fraction(30, 7), False),
    ],
)
def test_lemma1_examples(g, alpha, bound, tight):
    r = check_lemma1(g)
    assert r.holds and r.alpha == alpha and r.bound == bound and r.tight is tight


def test_lemma1_preconditions():
    with pytest.raises(PreconditionError):
        check_lemma1(complete_graph(4))
    with pytest.raises(PreconditionError):
        check_lemma1(from_edges(4, [(0, 1), (2, 3)]))


def test_lemma1_exhaustive_to_seven():
    for n in range(3, 8):
        for g in graphs(n, connected=True):
            if not g.is_complete():
                assert check_lemma1(g).holds


def test_ore_implies_hamiltonian_to_seven():
    for n in range(3, 8):
        for g in graphs(n):
            s = sigma2(g)
            if s is not INF and s >= n:
                assert hamilton_cycle(g) is not None
