"""The family of joins ``H + empty((n+1)/2)`` for odd ``n`` and its recognition."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Optional

from toughore.conditions import Verdict, compare_main_bound, sigma2
from toughore.cycles import hamilton_cycle
from toughore.errors import PreconditionError
from toughore.graph import Graph, bits, empty_graph, from_edges, join, popcount
from toughore.rational import Rational
from toughore.toughness import toughness_exact


@dataclass(frozen=True)
class ExtremalCertificate:
    independent_part: frozenset[int]
    core_part: frozenset[int]

    def validate(self, g: Graph) -> None:
        ind = sum(1 << v for v in self.independent_part)
        core = sum(1 << v for v in self.core_part)
        n = g.n
        if n % 2 == 0 or ind & core or ind | core != g.full_mask:
            raise ValueError("parts do not split an odd vertex set")
        if popcount(ind) != (n + 1) // 2 or not g.is_independent(ind):
            raise ValueError("independent part has the wrong size or an edge")
        if any(g.rows[v] != core for v in self.independent_part):
            raise ValueError("independent part is not fully joined to the core")


def core_pairs(m: int) -> list[tuple[int, int]]:
    """Edge slots of the core graph, in ``itertools.combinations`` order."""
    return list(combinations(range(m), 2))


def core_graph(m: int, core_edge_mask: int) -> Graph:
    pairs = core_pairs(m)
    if core_edge_mask < 0 or core_edge_mask >> len(pairs):
        raise ValueError(f"core index {core_edge_mask} outside 0..{(1 << len(pairs)) - 1}")
    return from_edges(m, [p for i, p in enumerate(pairs) if core_edge_mask >> i & 1])


def generate_family(n: int, core_edge_mask: int = 0) -> Graph:
    """Join the selected core on ``(n-1)/2`` vertices with ``(n+1)/2`` independent ones.

    Bit ``i`` of ``core_edge_mask`` selects ``core_pairs(m)[i]``. Core vertices
    come first.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"family members have odd order >= 3, got {n}")
    m = (n - 1) // 2
    return join(core_graph(m, core_edge_mask), empty_graph(m + 1))


def family_members(n: int) -> Iterator[Graph]:
    """Every labelled member from every core selection."""
    m = (n - 1) // 2
    for k in range(1 << len(core_pairs(m))):
        yield generate_family(n, k)


def membership(g: Graph) -> Optional[ExtremalCertificate]:
    """Recognise the family without an isomorphism search.

    An independent-side vertex has degree ``(n-1)/2`` and its neighbourhood
    is the core, so each such vertex proposes ``K = N(v)``; the proposal is
    accepted when ``V - K`` is independent, of size ``(n+1)/2``, and every
    vertex there sees exactly ``K``.
    """
    n = g.n
    if n < 3 or n % 2 == 0:
        return None
    m = (n - 1) // 2
    best = None
    for v in range(n):
        core = g.rows[v]
        if popcount(core) != m:
            continue
        ind = g.full_mask & ~core
        if popcount(ind) != m + 1:
            continue
        if all(g.rows[u] == core for u in bits(ind)):
            if best is None or ind < best:
                best = ind
    if best is None:
        return None
    return ExtremalCertificate(frozenset(bits(best)), frozenset(bits(g.full_mask & ~best)))


@dataclass(frozen=True)
class ExtremalProperties:
    tau: Rational
    sigma2: Rational
    hamiltonian: bool
    verdict: Verdict
    checks: dict

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def certify_extremal_properties(g: Graph) -> ExtremalProperties:
    """Recompute toughness, sigma2, hamiltonicity and the main-bound verdict of a member."""
    if membership(g) is None:
        raise PreconditionError("graph is not a member of the extremal family")
    n = g.n
    tau, _ = toughness_exact(g)
    s2 = sigma2(g)
    ham = hamilton_cycle(g) is not None
    verdict = compare_main_bound(s2, tau, n).verdict
    checks = {
        "tau": tau == Fraction(n - 1, n + 1),
        "sigma2": s2 == n - 1,
        "nonhamiltonian": not ham,
        "equal": verdict is Verdict.EQUAL,
    }
    return ExtremalProperties(tau, s2, ham, verdict, checks)
