"""Degree quantities, the four hamiltonicity thresholds and the independent-set bound.

Every threshold test is decided by integer cross-multiplication against the
toughness ``t = p/q``:

* main:  sigma2 vs 2n/(t+1) - 2   <=>  (sigma2 + 2)(p + q) vs 2nq
* bauer: delta  vs n/(t+1) - 1    <=>  (delta + 1)(p + q) vs nq
* ore:   sigma2 vs n
* dirac: delta  vs n/2            <=>  2 delta vs n
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from toughore.errors import PreconditionError
from toughore.graph import Graph, bits, is_connected, popcount
from toughore.rational import INF, Rational, as_rational
from toughore.toughness import toughness_exact


class BoundKind(str, enum.Enum):
    MAIN = "main"
    BAUER = "bauer"
    ORE = "ore"
    DIRAC = "dirac"


class Verdict(str, enum.Enum):
    GREATER = "greater"
    EQUAL = "equal"
    LESS = "less"
    VACUOUS = "vacuous"


@dataclass(frozen=True)
class BoundComparison:
    lhs: Rational
    rhs_kind: BoundKind
    verdict: Verdict
    bound: Optional[Fraction] = None

    @property
    def holds_strictly(self) -> bool:
        return self.verdict is Verdict.GREATER


def sigma2(g: Graph) -> Rational:
    """Least degree sum over nonadjacent pairs; ``INF`` for complete graphs."""
    degs = g.degrees()
    best: Rational = INF
    for v in range(g.n):
        non = g.full_mask & ~g.rows[v] & ~((1 << (v + 1)) - 1)
        for u in bits(non):
            s = degs[u] + degs[v]
            if best is INF or s < best:
                best = Fraction(s)
    return best


def min_degree(g: Graph) -> int:
    if g.n < 1:
        raise ValueError("minimum degree needs at least one vertex")
    return min(g.degrees())


def _trichotomy(a: int, b: int) -> Verdict:
    if a > b:
        return Verdict.GREATER
    if a == b:
        return Verdict.EQUAL
    return Verdict.LESS


def compare_main_bound(sigma: Rational, tau: Rational, n: int) -> BoundComparison:
    """Compare ``sigma2`` with ``2n/(tau+1) - 2``."""
    sigma = as_rational(sigma)
    tau = as_rational(tau)
    if sigma is INF or tau is INF or tau == 0:
        return BoundComparison(sigma, BoundKind.MAIN, Verdict.VACUOUS)
    p, q = tau.numerator, tau.denominator
    bound = Fraction(2 * n * q, p + q) - 2
    # sigma2 is an integer in practice, but keep the comparison exact for any rational
    lhs = (sigma.numerator + 2 * sigma.denominator) * (p + q)
    rhs = 2 * n * q * sigma.denominator
    return BoundComparison(sigma, BoundKind.MAIN, _trichotomy(lhs, rhs), bound)


def compare_bauer_bound(delta: int, tau: Rational, n: int) -> BoundComparison:
    """Compare ``delta`` with ``n/(tau+1) - 1``."""
    tau = as_rational(tau)
    lhs_value = Fraction(delta)
    if tau is INF or tau == 0:
        return BoundComparison(lhs_value, BoundKind.BAUER, Verdict.VACUOUS)
    p, q = tau.numerator, tau.denominator
    bound = Fraction(n * q, p + q) - 1
    return BoundComparison(
        lhs_value, BoundKind.BAUER, _trichotomy((delta + 1) * (p + q), n * q), bound
    )


def compare_ore_bound(sigma: Rational, n: int) -> BoundComparison:
    sigma = as_rational(sigma)
    if sigma is INF:
        return BoundComparison(sigma, BoundKind.ORE, Verdict.VACUOUS)
    return BoundComparison(
        sigma,
        BoundKind.ORE,
        _trichotomy(sigma.numerator, n * sigma.denominator),
        Fraction(n),
    )


def compare_dirac_bound(delta: int, n: int, complete: bool = False) -> BoundComparison:
    if complete:
        return BoundComparison(Fraction(delta), BoundKind.DIRAC, Verdict.VACUOUS)
    return BoundComparison(
        Fraction(delta), BoundKind.DIRAC, _trichotomy(2 * delta, n), Fraction(n, 2)
    )


# independence number --------------------------------------------------------


def _clique_cover_size(rows, cand: int) -> int:
    k = 0
    while cand:
        low = cand & -cand
        cand ^= low
        common = rows[low.bit_length() - 1] & cand
        while common:
            b = common & -common
            cand ^= b
            common &= rows[b.bit_length() - 1]
        k += 1
    return k


def independence_number(g: Graph) -> tuple[int, frozenset[int]]:
    """``alpha(G)`` with one maximum independent set.

    Branch and bound on the lowest candidate vertex; a greedy clique cover of
    the candidates caps how many more vertices a branch can add.
    """
    rows = g.rows
    best_size = 0
    best_mask = 0

    def expand(size: int, chosen: int, cand: int) -> None:
        nonlocal best_size, best_mask
        if not cand:
            if size > best_size:
                best_size, best_mask = size, chosen
            return
        if size + _clique_cover_size(rows, cand) <= best_size:
            return
        low = cand & -cand
        v = low.bit_length() - 1
        expand(size + 1, chosen | low, cand & ~rows[v] & ~low)
        expand(size, chosen, cand & ~low)

    expand(0, 0, g.full_mask)
    return best_size, frozenset(bits(best_mask))


def independence_naive_oracle(g: Graph) -> int:
    if g.n > 16:
        raise ValueError("naive independence enumerates 2^n subsets; n > 16")
    best = 0
    for s in range(1 << g.n):
        if popcount(s) > best and g.is_independent(s):
            best = popcount(s)
    return best


@dataclass(frozen=True)
class Lemma1Result:
    holds: bool
    alpha: int
    bound: Fraction
    tight: bool
    counterexample: Optional[frozenset[int]] = None


def check_lemma1(g: Graph, tau: Optional[Rational] = None) -> Lemma1Result:
    """Test ``alpha(G) <= n/(tau+1)`` on a connected noncomplete graph."""
    if g.is_complete() or not is_connected(g):
        raise PreconditionError("needs a connected noncomplete graph")
    if tau is None:
        tau = toughness_exact(g)[0]
    p, q = tau.numerator, tau.denominator
    alpha, mis = independence_number(g)
    lhs = alpha * (p + q)
    rhs = g.n * q
    holds = lhs <= rhs
    return Lemma1Result(
        holds=holds,
        alpha=alpha,
        bound=Fraction(rhs, p + q),
        tight=lhs == rhs,
        counterexample=None if holds else mis,
    )
