import pytest

from toughore.errors import BudgetExceeded, PreconditionError
from toughore.generate import graphs
from toughore.graph import complete_bipartite, cycle_graph, empty_graph, from_edges, petersen_graph
from toughore.lemmas import PASS, VACUOUS, check_lemma_2_3, check_lemma_2_4


def theta(paths: int, interior: int):
    """Two hubs 0 and 1 joined by internally disjoint paths."""
    edges, nxt = [], 2
    for _ in range(paths):
        chain = [0] + list(range(nxt, nxt + interior)) + [1]
        edges += list(zip(chain, chain[1:]))
        nxt += interior
    return from_edges(nxt, edges)


def test_k23_tight():
    g = complete_bipartite(2, 3)
    r3, r4 = check_lemma_2_3(g), check_lemma_2_4(g)
    assert r3.status == PASS and r3.tight and r3.parameter == 1
    assert r3.cycle.vertices >= {0, 1} and len(r3.cycle) == 4
    assert r4.status == PASS and r4.tight and r4.checked == 3


def test_theta_graph_with_larger_parameter():
    g = theta(3, 2)
    r3 = check_lemma_2_3(g)
    # (2/3 + 2)(2 + 1) = 8 = n
    assert r3.status == PASS and r3.parameter == 2 and r3.tight
    r4 = check_lemma_2_4(g)
    assert r4.status == PASS and r4.parameter == 2 and not r4.tight


def test_petersen_passes():
    g = petersen_graph()
    assert check_lemma_2_3(g).status == PASS
    r4 = check_lemma_2_4(g)
    assert r4.status == PASS and r4.checked == 25


def test_hamiltonian_is_vacuous():
    for check in (check_lemma_2_3, check_lemma_2_4):
        r = check(cycle_graph(6))
        assert r.status == VACUOUS and r.ok


def test_preconditions_and_budgets():
    bowtie = from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    for check in (check_lemma_2_3, check_lemma_2_4):
        with pytest.raises(PreconditionError):
            check(bowtie)
    with pytest.raises(BudgetExceeded):
        check_lemma_2_3(empty_graph(13))
    with pytest.raises(BudgetExceeded):
        check_lemma_2_4(theta(3, 3))


def test_no_violation_to_seven():
    for n in range(3, 8):
        for g in graphs(n, biconnected=True):
            assert check_lemma_2_3(g).ok
            assert check_lemma_2_4(g).ok
