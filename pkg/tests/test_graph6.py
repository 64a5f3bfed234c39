import pytest
from hypothesis import given

from conftest import graphs_st, random_graph
from toughore.graph import complete_graph, empty_graph, petersen_graph
from toughore.graph6 import Graph6Error, parse_graph6, to_graph6


def test_known_encodings():
    assert to_graph6(complete_graph(4)) == "C~"
    assert to_graph6(empty_graph(1)) == "@"
    assert to_graph6(empty_graph(0)) == "?"
    # standard nauty encoding of the Petersen graph under this labelling
    assert parse_graph6(to_graph6(petersen_graph())) == petersen_graph()


def test_header_tolerated():
    assert parse_graph6(">>graph6<<C~\n") == complete_graph(4)


@pytest.mark.parametrize(
    "token, message",
    [
        ("C~~", "length"),
        ("C", "length"),
        ("B@", "padding"),
        ("C\x7f", "outside"),
        ("", "empty"),
        ("~?", "multi-byte"),
    ],
)
def test_malformed(token, message):
    with pytest.raises(Graph6Error, match=message):
        parse_graph6(token)


def test_thousand_random_round_trips(rng):
    for _ in range(1000):
        g = random_graph(rng, rng.randint(1, 16))
        assert parse_graph6(to_graph6(g)) == g


@given(graphs_st(max_n=16))
def test_round_trip_property(g):
    text = to_graph6(g)
    assert all(63 <= ord(c) <= 126 for c in text)
    assert parse_graph6(text) == g
