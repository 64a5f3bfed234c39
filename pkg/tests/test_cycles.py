from fractions import Fraction

import pytest
from hypothesis import given

from conftest import graphs_st, random_graph
from toughore.cycles import (
    AcyclicGraphError,
    Arc,
    CycleError,
    ExtendedCycle,
    OrientedCycle,
    SpliceError,
    Through,
    ToughnessContradiction,
    cycle_vertex_sets,
    enumerate_cycles,
    extend_cycle,
    hamilton_backtrack_oracle,
    hamilton_cycle,
    least_cycle_on,
    minimizing_d_cycle,
    smallest_d_lambda,
    splice,
)
from toughore.errors import BudgetExceeded, PreconditionError
from toughore.generate import graphs
from toughore.graph import (
    complete_bipartite,
    complete_graph,
    component_masks,
    cycle_graph,
    empty_graph,
    from_edges,
    path_graph,
    petersen_graph,
    popcount,
    star_graph,
)
from toughore.toughness import toughness_exact


def c6_with(extra, n=6):
    return from_edges(n, [(i, (i + 1) % 6) for i in range(6)] + list(extra))


class TestOrientedCycle:
    def test_navigation(self):
        c = OrientedCycle((3, 1, 4, 0, 2))
        assert c.succ(2) == 3 and c.pred(3) == 2
        assert c.arc(1, 0) == (1, 4, 0)
        assert c.arc(1, 0, forward=False) == (1, 3, 2, 0)
        assert c.dist(1, 0) == 2 and c.dist(0, 1) == 3
        assert c.successors(4, 2) == {0, 2}
        assert c.canonical().order == (0, 2, 3, 1, 4)
        assert c.reversed().order == (3, 2, 0, 4, 1)

    def test_rejects_bad_sequences(self):
        with pytest.raises(CycleError):
            OrientedCycle((0, 1))
        with pytest.raises(CycleError):
            OrientedCycle((0, 1, 0))
        with pytest.raises(CycleError):
            OrientedCycle((0, 1, 2)).validate(path_graph(3))


class TestHamilton:
    def test_examples(self):
        assert hamilton_cycle(cycle_graph(5)).order == (0, 1, 2, 3, 4)
        assert hamilton_cycle(complete_bipartite(2, 3)) is None
        assert hamilton_cycle(petersen_graph()) is None
        assert hamilton_backtrack_oracle(petersen_graph()) is None
        assert hamilton_backtrack_oracle(complete_graph(4)).is_valid(complete_graph(4))
        assert hamilton_backtrack_oracle(path_graph(4)) is None

    def test_budget(self):
        with pytest.raises(BudgetExceeded) as info:
            hamilton_cycle(empty_graph(25))
        assert info.value.budget == "hamilton-dp"
        with pytest.raises(ValueError):
            hamilton_cycle(path_graph(2))

    def test_large_order_within_budget(self):
        c = hamilton_cycle(cycle_graph(24))
        assert c.order == tuple(range(24))

    def test_agrees_with_backtracking_exhaustive(self):
        for n in range(3, 8):
            for g in graphs(n):
                a, b = hamilton_cycle(g), hamilton_backtrack_oracle(g)
                assert (a is None) == (b is None)

    def test_agrees_with_backtracking_random(self, rng):
        for _ in range(300):
            g = random_graph(rng, rng.randint(3, 13))
            a = hamilton_cycle(g)
            assert (a is None) == (hamilton_backtrack_oracle(g) is None)
            if a is not None:
                a.validate(g)
                assert len(a) == g.n


class TestEnumeration:
    def test_counts(self):
        assert sum(1 for _ in enumerate_cycles(complete_graph(5))) == 37
        assert sum(1 for _ in enumerate_cycles(complete_bipartite(2, 3))) == 3
        assert sum(1 for _ in enumerate_cycles(petersen_graph())) == 57

    def test_vertex_sets_match_enumeration(self, rng):
        for _ in range(80):
            g = random_graph(rng, rng.randint(3, 9))
            cycles = list(enumerate_cycles(g))
            assert set(cycle_vertex_sets(g)) == {c.mask for c in cycles}
            for mask in cycle_vertex_sets(g):
                least = min(c.order for c in cycles if c.mask == mask)
                assert least_cycle_on(g, mask).order == least

    def test_budget(self):
        with pytest.raises(BudgetExceeded) as info:
            list(enumerate_cycles(empty_graph(15)))
        assert info.value.budget == "cycle-enumeration"


def _oracle_smallest_lambda(g):
    best = None
    for c in enumerate_cycles(g):
        orders = [popcount(m) for m in component_masks(g, c.mask)]
        lam = max(orders, default=0) + 1
        best = lam if best is None else min(best, lam)
    return best


class TestDLambda:
    def test_examples(self):
        r = smallest_d_lambda(complete_bipartite(2, 3))
        assert r.lam == 2 and len(r.cycle) == 4 and r.leftover_profile == (1,)
        assert r.cycle.vertices >= {0, 1}
        assert smallest_d_lambda(cycle_graph(7)).lam == 1
        with pytest.raises(AcyclicGraphError):
            smallest_d_lambda(star_graph(3))

    def test_against_enumeration(self, rng):
        for _ in range(80):
            g = random_graph(rng, rng.randint(4, 9), 0.35)
            expected = _oracle_smallest_lambda(g)
            if expected is None:
                continue
            r = smallest_d_lambda(g)
            assert r.lam == expected
            r.cycle.validate(g)
            assert all(o < r.lam for o in r.leftover_profile)

    @given(graphs_st(min_n=3, max_n=9))
    def test_lambda_one_iff_hamiltonian(self, g):
        try:
            r = smallest_d_lambda(g)
        except AcyclicGraphError:
            return
        assert (r.lam == 1) == (hamilton_cycle(g) is not None)

    def test_minimizing_examples(self):
        r = minimizing_d_cycle(complete_bipartite(2, 3), 1)
        assert len(r.cycle) == 4 and {0, 1} <= r.cycle.vertices and r.c_vector == (0, 1)
        pendant = c6_with([(0, 6)], n=7)
        r = minimizing_d_cycle(pendant, 1)
        assert r.cycle.order == (0, 1, 2, 3, 4, 5) and r.c_vector == (0, 1)
        with pytest.raises(PreconditionError):
            minimizing_d_cycle(cycle_graph(5), 1)

    def test_minimizing_prefers_fewer_large_leftovers(self):
        # two triangles on a hub plus a path tail: least lambda is 3
        g = from_edges(8, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (1, 5), (5, 6), (3, 7)])
        r = smallest_d_lambda(g)
        brute = []
        for c in enumerate_cycles(g):
            orders = [popcount(m) for m in component_masks(g, c.mask)]
            if max(orders, default=0) < r.lam:
                vec = tuple(sum(1 for o in orders if o >= k) for k in range(r.lam, 0, -1))
                brute.append((vec, -len(c), c.order))
        assert (r.c_vector, -len(r.cycle), r.cycle.order) == min(brute)


class TestSplice:
    def test_identity(self):
        g = cycle_graph(6)
        c = OrientedCycle(tuple(range(6)))
        out = splice(g, c, [Arc(0, 5)])
        assert out == c and len(out) == 6

    def test_crossing_chord_rotation(self):
        g = c6_with([(0, 3), (1, 4)])
        c = OrientedCycle(tuple(range(6)))
        program = [Arc(0, 0), Arc(3, 1, forward=False), Arc(4, 5)]
        out = splice(g, c, program)
        assert out.order == (0, 3, 2, 1, 4, 5)
        assert len(out) == sum(len(c.arc(s.start, s.end, s.forward)) for s in program)
        out.validate(g)

    def test_through_off_cycle_vertex(self):
        g = c6_with([(0, 6), (6, 2)], n=7)
        c = OrientedCycle(tuple(range(6)))
        out = splice(g, c, [Arc(2, 0), Through(6)])
        assert out.order == (2, 3, 4, 5, 0, 6)

    def test_errors(self):
        g = cycle_graph(6)
        c = OrientedCycle(tuple(range(6)))
        with pytest.raises(SpliceError, match="junction"):
            splice(g, c, [Arc(0, 1), Arc(3, 5)])
        with pytest.raises(SpliceError, match="twice"):
            splice(g, c, [Arc(0, 5), Arc(1, 2)])
        with pytest.raises(SpliceError, match="close"):
            splice(g, c, [Arc(0, 4)])


class TestExtendCycle:
    def test_rule_a(self):
        g = complete_graph(4)
        out = extend_cycle(g, OrientedCycle((0, 1, 2)), 3, 1)
        assert isinstance(out, ExtendedCycle) and out.rule == "A"
        assert out.cycle.order == (0, 3, 1, 2)

    def test_rule_b(self):
        g = c6_with([(6, 0), (6, 3), (1, 4)], n=7)
        out = extend_cycle(g, OrientedCycle(tuple(range(6))), 6, Fraction(3, 2))
        assert isinstance(out, ExtendedCycle) and out.rule == "B"
        assert out.cycle.order == (6, 0, 5, 4, 1, 2, 3)
        out.cycle.validate(g)

    def test_contradiction_witness(self):
        g = from_edges(6, [(i, (i + 1) % 5) for i in range(5)] + [(5, 0), (5, 2)])
        out = extend_cycle(g, OrientedCycle(tuple(range(5))), 5, Fraction(3, 2))
        assert isinstance(out, ToughnessContradiction)
        assert out.independent_set == {5, 1, 3}
        assert g.is_independent(0b101010)
        assert len(out.independent_set) > out.bound == Fraction(12, 5)

    def test_precondition(self):
        g = c6_with([(6, 0)], n=7)
        with pytest.raises(PreconditionError):
            extend_cycle(g, OrientedCycle(tuple(range(6))), 6, 1)
        with pytest.raises(PreconditionError):
            extend_cycle(g, OrientedCycle(tuple(range(6))), 0, 1)

    def test_never_contradicts_true_toughness(self):
        for n in range(4, 8):
            for g in graphs(n, connected=True):
                if g.is_complete():
                    continue
                tau, _ = toughness_exact(g)
                p, q = tau.numerator, tau.denominator
                for mask in cycle_vertex_sets(g):
                    if mask == g.full_mask:
                        continue
                    c = least_cycle_on(g, mask)
                    for x in range(n):
                        if mask >> x & 1:
                            continue
                        deg = popcount(g.rows[x] & mask)
                        if (deg + 1) * (p + q) > n * q:
                            out = extend_cycle(g, c, x, tau)
                            assert isinstance(out, ExtendedCycle)
                            assert out.cycle.vertices == c.vertices | {x}
