"""Exhaustive statement checks for the dominating-cycle and path-component lemmas.

Both checks run with ``t = tau(G)`` on 2-connected graphs and take the lemma
parameter from the least D_lambda-cycle: a graph whose least lambda is
``s + 1 >= 2`` has a D_{s+1}-cycle but no D_s-cycle. Hamiltonian graphs
satisfy neither hypothesis and pass vacuously.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from toughore.cycles import (
    OrientedCycle,
    _cycle_table,
    cycle_vertex_sets,
    least_cycle_on,
    minimizing_d_cycle,
    smallest_d_lambda,
)
from toughore.errors import BudgetExceeded, PreconditionError
from toughore.graph import Graph, bits, component_masks, is_biconnected, is_path_mask, popcount
from toughore.rational import Rational
from toughore.toughness import toughness_exact

LEMMA3_MAX_ORDER = 12
LEMMA4_MAX_ORDER = 10

VACUOUS = "vacuous"
PASS = "pass"
VIOLATION = "violation"


@dataclass(frozen=True)
class LemmaViolation:
    graph: Graph
    lemma_id: str
    cycle: OrientedCycle
    detail: dict


@dataclass(frozen=True)
class LemmaReport:
    lemma_id: str
    status: str
    tight: bool = False
    parameter: Optional[int] = None
    checked: int = 0
    violation: Optional[LemmaViolation] = None
    cycle: Optional[OrientedCycle] = field(default=None, compare=False)

    @property
    def ok(self) -> bool:
        return self.status != VIOLATION


def _prepare(g: Graph, limit: int, budget: str, tau: Optional[Rational]):
    if g.n > limit:
        raise BudgetExceeded(budget, limit, g.n)
    if not is_biconnected(g):
        raise PreconditionError("needs a 2-connected graph")
    lam = smallest_d_lambda(g).lam
    if lam == 1:
        return None
    if tau is None:
        tau = toughness_exact(g)[0]
    return lam - 1, tau


def check_lemma_2_3(g: Graph, tau: Optional[Rational] = None) -> LemmaReport:
    """``n >= (t + |H|)(d_G(H) + 1)`` for each component ``H`` left by a minimising D_{s+1}-cycle."""
    prep = _prepare(g, LEMMA3_MAX_ORDER, "lemma3", tau)
    if prep is None:
        return LemmaReport("2.3", VACUOUS)
    s, tau = prep
    p, q = tau.numerator, tau.denominator
    report = minimizing_d_cycle(g, s)
    c = report.cycle
    n = g.n
    tight = False
    comps = component_masks(g, c.mask)
    for comp in comps:
        size = popcount(comp)
        d = popcount(g.neighborhood_of(comp))
        lhs = n * q
        rhs = (p + size * q) * (d + 1)
        if lhs < rhs:
            detail = {
                "component": sorted(bits(comp)),
                "order": size,
                "degree": d,
                "t": tau,
                "required": Fraction(rhs, q),
            }
            return LemmaReport("2.3", VIOLATION, parameter=s, checked=len(comps),
                               violation=LemmaViolation(g, "2.3", c, detail), cycle=c)
        tight = tight or lhs == rhs
    return LemmaReport("2.3", PASS, tight=tight, parameter=s, checked=len(comps), cycle=c)


def check_lemma_2_4(g: Graph, tau: Optional[Rational] = None) -> LemmaReport:
    """Every admissible cycle leaves a long path-component with a low-degree vertex.

    A cycle is admissible when each component it leaves has order at most
    ``lambda - 1`` or is a path of order at least ``lambda``. The lemma then
    asks for such a path-component ``H`` and ``x`` in ``H`` with
    ``deg(x, C) <= n/(t+1) - lambda``. Only ``V(C)`` matters, so one cycle per
    vertex set is examined.
    """
    prep = _prepare(g, LEMMA4_MAX_ORDER, "lemma4", tau)
    if prep is None:
        return LemmaReport("2.4", VACUOUS)
    lam, tau = prep
    p, q = tau.numerator, tau.denominator
    n = g.n
    table = _cycle_table(g)
    checked = 0
    tight = False
    for mask in cycle_vertex_sets(g, table):
        comps = component_masks(g, mask)
        long_paths = []
        admissible = True
        for comp in comps:
            size = popcount(comp)
            if size <= lam - 1:
                continue
            if is_path_mask(g, comp):
                long_paths.append(comp)
            else:
                admissible = False
                break
        if not admissible:
            continue
        checked += 1
        # deg(x, C) <= n/(t+1) - lam  <=>  (deg + lam)(p + q) <= nq
        best = None
        for comp in long_paths:
            for x in bits(comp):
                slack = n * q - (popcount(g.rows[x] & mask) + lam) * (p + q)
                if best is None or slack > best:
                    best = slack
        if best is None or best < 0:
            c = least_cycle_on(g, mask, table)
            detail = {
                "lambda": lam,
                "t": tau,
                "path_components": [sorted(bits(h)) for h in long_paths],
                "min_degree_on_cycle": min(
                    (popcount(g.rows[x] & mask) for h in long_paths for x in bits(h)),
                    default=None,
                ),
                "bound": Fraction(n * q, p + q) - lam,
            }
            return LemmaReport("2.4", VIOLATION, parameter=lam, checked=checked,
                               violation=LemmaViolation(g, "2.4", c, detail), cycle=c)
        tight = tight or best == 0
    status = PASS if checked else VACUOUS
    return LemmaReport("2.4", status, tight=tight, parameter=lam, checked=checked)
