"""Immutable simple graphs on at most 32 vertices, stored as adjacency bitmasks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from toughore.backend import kernels

MAX_ORDER = 32


class GraphError(ValueError):
    """Invalid graph construction (bad endpoint, loop, asymmetric rows, width)."""


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    ``rows[v]`` is the neighbourhood of ``v`` as a bitmask. Instances are
    hashable and compare by labelled identity, not isomorphism.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.rows) != self.n:
            raise GraphError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {v} names a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at {v}")
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> "Graph":
        rows = tuple(int(r) for r in rows)
        return cls(len(rows), rows)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.rows[v]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def is_complete(self) -> bool:
        full = self.full_mask
        return all(r | (1 << v) == full for v, r in enumerate(self.rows))

    def degree_into(self, v: int, mask: int) -> int:
        """Number of neighbours of ``v`` inside the vertex mask."""
        return popcount(self.rows[v] & mask)

    def neighborhood_of(self, mask: int) -> int:
        """``N(S)``: vertices outside ``S`` adjacent to some vertex of ``S``."""
        nb = 0
        for v in bits(mask):
            nb |= self.rows[v]
        return nb & ~mask

    def is_independent(self, mask: int) -> bool:
        return all(not self.rows[v] & mask for v in bits(mask))

    def induced_edges(self, mask: int) -> int:
        return sum(popcount(self.rows[v] & mask) for v in bits(mask)) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from unordered pairs; repeated pairs are harmless."""
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    """``g + h``: disjoint union with every edge between the two sides.

    Vertices of ``h`` are shifted up by ``g.n``.
    """
    n = g.n + h.n
    if n > MAX_ORDER:
        raise GraphError(f"join has order {n} > {MAX_ORDER}")
    gmask = g.full_mask
    hmask = h.full_mask << g.n
    rows = [r | hmask for r in g.rows] + [(r << g.n) | gmask for r in h.rows]
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.rows)))


def component_masks(g: Graph, removed: int = 0) -> list[int]:
    return kernels.components(g.rows, g.n, removed)


def components(g: Graph, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    """Components of ``g - removed``, each as a vertex set, ordered by least vertex."""
    mask = removed if isinstance(removed, int) else to_mask(removed)
    return [frozenset(bits(c)) for c in component_masks(g, mask)]


def count_components(g: Graph, removed: int = 0, min_order: int = 1) -> int:
    """``c_k(G - S)``: components of order at least ``min_order``."""
    return sum(1 for c in component_masks(g, removed) if popcount(c) >= min_order)


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(component_masks(g)) == 1


def is_biconnected(g: Graph) -> bool:
    """2-connected: at least three vertices, connected, no cut vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    return all(len(component_masks(g, 1 << v)) == 1 for v in range(g.n))


def is_path_mask(g: Graph, mask: int) -> bool:
    """Whether ``G[mask]`` is a path graph (single vertices and edges count)."""
    if not mask:
        return False
    sub = [g.rows[v] & mask for v in bits(mask)]
    if any(popcount(r) > 2 for r in sub):
        return False
    k = popcount(mask)
    if sum(popcount(r) for r in sub) // 2 != k - 1:
        return False
    return len(component_masks(g, g.full_mask & ~mask)) == 1


# named graphs ---------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return from_edges(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return from_edges(n, ())


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}`` with the ``a``-side first."""
    return join(empty_graph(a), empty_graph(b))


def star_graph(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_ORDER:
        raise GraphError(f"union has order {n} > {MAX_ORDER}")
    return Graph(n, g.rows + tuple(r << g.n for r in h.rows))
