from fractions import Fraction

import pytest

from toughore.conditions import Verdict
from toughore.errors import PreconditionError
from toughore.extremal import (
    ExtremalCertificate,
    certify_extremal_properties,
    core_pairs,
    family_members,
    generate_family,
    membership,
)
from toughore.generate import canonical_form
from conftest import permuted
from toughore.graph import complete_bipartite, complete_graph, cycle_graph, path_graph


def test_core_pairs_order():
    assert core_pairs(3) == [(0, 1), (0, 2), (1, 2)]


def test_generate_examples():
    assert generate_family(5) == complete_bipartite(2, 3)
    assert list(generate_family(3).degrees()) == [2, 1, 1]
    g = generate_family(7, 0b101)
    assert g.num_edges == 2 + 12
    with pytest.raises(ValueError):
        generate_family(6)
    with pytest.raises(ValueError):
        generate_family(7, 8)


def test_membership_examples():
    cert = membership(complete_bipartite(2, 3))
    assert cert == ExtremalCertificate(frozenset({2, 3, 4}), frozenset({0, 1}))
    cert.validate(complete_bipartite(2, 3))
    assert membership(cycle_graph(5)) is None
    assert membership(complete_graph(4)) is None
    assert membership(complete_graph(5)) is None
    p3 = membership(path_graph(3))
    assert p3.core_part == {1} and p3.independent_part == {0, 2}


def test_certify_examples():
    props = certify_extremal_properties(path_graph(3))
    assert props.tau == Fraction(1, 2) and props.sigma2 == 2 and props.passed
    props = certify_extremal_properties(generate_family(7, 0b101))
    assert props.tau == Fraction(3, 4) and props.sigma2 == 6
    assert props.verdict is Verdict.EQUAL and not props.hamiltonian and props.passed
    with pytest.raises(PreconditionError):
        certify_extremal_properties(cycle_graph(5))


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_every_generated_member_is_recognised(n, rng):
    for g in family_members(n):
        cert = membership(g)
        assert cert is not None
        cert.validate(g)
        perm = list(range(n))
        rng.shuffle(perm)
        assert membership(permuted(g, perm)) is not None


def test_member_classes_at_seven():
    # cores on three vertices: empty, one edge, path, triangle
    classes = {canonical_form(g) for g in family_members(7)}
    assert len(classes) == 4
