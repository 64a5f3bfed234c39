"""Exact toughness with a witness cutset, and the brute-force oracle behind it."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from toughore.backend import kernels
from toughore.graph import Graph, bits, popcount
from toughore.rational import INF, Rational, as_rational

NAIVE_MAX_ORDER = 16


@dataclass(frozen=True)
class ToughnessWitness:
    cutset: frozenset[int]
    component_count: int

    @property
    def value(self) -> Fraction:
        return Fraction(len(self.cutset), self.component_count)

    @property
    def mask(self) -> int:
        return sum(1 << v for v in self.cutset)


class ToughnessDecision(NamedTuple):
    tough: bool
    cutset: Optional[frozenset[int]]


def toughness_exact(g: Graph, shaved: bool = True) -> tuple[Rational, Optional[ToughnessWitness]]:
    """``tau(G)`` together with a minimising cutset.

    Complete graphs give ``(INF, None)``; disconnected graphs give 0 with the
    empty cutset. Among minimisers the smallest bitmask is reported. With
    ``shaved`` the search only counts cutsets whose every vertex sees at least
    two components of ``G - S``; no minimiser is lost by that restriction.
    """
    if g.n < 1:
        raise ValueError("toughness needs at least one vertex")
    if g.is_complete():
        return INF, None
    size, count, mask = kernels.toughness_search(g.rows, g.n, shaved)
    witness = ToughnessWitness(frozenset(bits(mask)), count)
    return Fraction(size, count), witness


def toughness(g: Graph) -> Rational:
    return toughness_exact(g)[0]


def toughness_naive_oracle(g: Graph) -> Rational:
    """Literal minimum over all ``2^n`` subsets, sharing no code with the search."""
    n = g.n
    if n > NAIVE_MAX_ORDER:
        raise ValueError(f"naive toughness enumerates 2^n subsets; n={n} > {NAIVE_MAX_ORDER}")
    adj = [set(g.neighbors(v)) for v in range(n)]
    best: Rational = INF
    for s in range(1 << n):
        keep = [v for v in range(n) if not s >> v & 1]
        seen: set[int] = set()
        c = 0
        for root in keep:
            if root in seen:
                continue
            c += 1
            stack = [root]
            seen.add(root)
            while stack:
                v = stack.pop()
                for u in adj[v]:
                    if u not in seen and not s >> u & 1:
                        seen.add(u)
                        stack.append(u)
        if c >= 2:
            value = Fraction(popcount(s), c)
            if value < best:
                best = value
    return best


def is_t_tough(g: Graph, t) -> ToughnessDecision:
    """Decide ``|S| >= t * c(G-S)`` for every disconnecting ``S``.

    On failure the cutset returned violates the inequality.
    """
    t = as_rational(t)
    if t is not INF and t < 0:
        raise ValueError("t must be nonnegative")
    if t == 0:
        return ToughnessDecision(True, None)
    tau, witness = toughness_exact(g)
    if tau >= t:
        return ToughnessDecision(True, None)
    return ToughnessDecision(False, witness.cutset)
