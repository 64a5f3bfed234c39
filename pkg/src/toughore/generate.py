"""Isomorphism-free generation of small graphs for test sweeps.

Graphs on ``k + 1`` vertices come from those on ``k`` by adding a
minimum-degree vertex and keeping one canonical code per class. Output order
is ascending canonical code, so sweeps are reproducible.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from toughore.backend import kernels
from toughore.graph import Graph, is_biconnected, is_connected

MAX_GENERATED_ORDER = 10

# Known totals for cross-checking the generator.
GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080}


@lru_cache(maxsize=None)
def canonical_codes(n: int) -> tuple[int, ...]:
    if not 1 <= n <= MAX_GENERATED_ORDER:
        raise ValueError(f"the built-in generator covers 1 <= n <= {MAX_GENERATED_ORDER}")
    if n == 1:
        return (0,)
    return tuple(kernels.extend_codes(canonical_codes(n - 1), n - 1))


def from_code(code: int, n: int) -> Graph:
    return Graph(n, tuple(kernels.decode_code(code, n)))


def canonical_form(g: Graph) -> Graph:
    return from_code(kernels.canonical_code(g.rows, g.n), g.n)


def graphs(n: int, connected: bool = False, biconnected: bool = False) -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` vertices."""
    for code in canonical_codes(n):
        g = from_code(code, n)
        if biconnected and not is_biconnected(g):
            continue
        if connected and not is_connected(g):
            continue
        yield g
