"""Hamilton cycles, D_lambda-cycles and oriented-cycle surgery.

Exhaustive cycle questions are answered from a subset table: for every vertex
set ``U`` the kernel records which vertices end a path that starts at
``min(U)`` and covers exactly ``U``. ``G[U]`` carries a cycle on all of ``U``
iff one of those endpoints is adjacent to ``min(U)``. Everything about
``G - V(C)`` depends only on ``V(C)``, so D_lambda questions reduce to scans
over these vertex sets. A plain DFS enumerator is kept as an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Optional, Sequence, Union

from toughore.backend import kernels
from toughore.errors import BudgetExceeded, PreconditionError
from toughore.graph import Graph, bits, component_masks, popcount
from toughore.rational import INF, Rational, as_rational

HAMILTON_MAX_ORDER = 24
ENUMERATION_MAX_ORDER = 14


class CycleError(ValueError):
    """A vertex sequence is not a cycle of the host graph."""


class AcyclicGraphError(PreconditionError):
    """The graph is a forest."""


@dataclass(frozen=True)
class OrientedCycle:
    """A cycle read in the direction of ``order``; ``order[-1]`` wraps to ``order[0]``."""

    order: tuple[int, ...]
    _pos: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        order = tuple(self.order)
        object.__setattr__(self, "order", order)
        if len(order) < 3:
            raise CycleError("a cycle needs at least three vertices")
        pos = {v: i for i, v in enumerate(order)}
        if len(pos) != len(order):
            raise CycleError(f"repeated vertex in {order}")
        object.__setattr__(self, "_pos", pos)

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __contains__(self, v) -> bool:
        return v in self._pos

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.order)

    @property
    def mask(self) -> int:
        return sum(1 << v for v in self.order)

    def index(self, v: int) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise CycleError(f"vertex {v} is not on the cycle") from None

    def succ(self, v: int) -> int:
        return self.order[(self.index(v) + 1) % len(self.order)]

    def pred(self, v: int) -> int:
        return self.order[self.index(v) - 1]

    def dist(self, u: int, v: int) -> int:
        """Length of the forward segment from ``u`` to ``v``."""
        return (self.index(v) - self.index(u)) % len(self.order)

    def arc(self, u: int, v: int, forward: bool = True) -> tuple[int, ...]:
        """Vertices met walking from ``u`` to ``v`` with (or against) the orientation."""
        k = len(self.order)
        i = self.index(u)
        steps = self.dist(u, v) if forward else self.dist(v, u)
        step = 1 if forward else -1
        return tuple(self.order[(i + step * j) % k] for j in range(steps + 1))

    def successors(self, u: int, k: int) -> frozenset[int]:
        """The ``k`` consecutive successors of ``u`` (at forward distance 1..k)."""
        i = self.index(u)
        size = len(self.order)
        return frozenset(self.order[(i + j) % size] for j in range(1, min(k, size - 1) + 1))

    def reversed(self) -> "OrientedCycle":
        return OrientedCycle((self.order[0],) + tuple(reversed(self.order[1:])))

    def canonical(self) -> "OrientedCycle":
        """Rotate to start at the least vertex, direction with the smaller second vertex."""
        i = self.order.index(min(self.order))
        rot = self.order[i:] + self.order[:i]
        if rot[-1] < rot[1]:
            rot = (rot[0],) + tuple(reversed(rot[1:]))
        return OrientedCycle(rot)

    def edges(self) -> list[tuple[int, int]]:
        k = len(self.order)
        return [(self.order[i], self.order[(i + 1) % k]) for i in range(k)]

    def validate(self, g: Graph) -> None:
        for u, v in self.edges():
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                raise CycleError(f"{u}{v} is not an edge of the host graph")

    def is_valid(self, g: Graph) -> bool:
        try:
            self.validate(g)
        except CycleError:
            return False
        return True


# Hamilton cycles --------------------------------------------------------------


def hamilton_cycle(g: Graph) -> Optional[OrientedCycle]:
    """A Hamilton cycle (lexicographically least from vertex 0), or ``None``.

    Exact subset dynamic program over (covered set, endpoint) anchored at 0.
    """
    if g.n < 3:
        raise ValueError("Hamilton cycles need n >= 3")
    if g.n > HAMILTON_MAX_ORDER:
        raise BudgetExceeded("hamilton-dp", HAMILTON_MAX_ORDER, g.n)
    seq = kernels.hamilton_cycle(g.rows, g.n)
    if seq is None:
        return None
    cycle = OrientedCycle(seq)
    cycle.validate(g)
    return cycle


def hamilton_backtrack_oracle(g: Graph) -> Optional[OrientedCycle]:
    """Independent depth-first search with a degree-feasibility prune."""
    n = g.n
    if n < 3:
        raise ValueError("Hamilton cycles need n >= 3")
    adj = [sorted(g.neighbors(v)) for v in range(n)]
    if any(len(a) < 2 for a in adj):
        return None
    path = [0]
    on_path = [False] * n
    on_path[0] = True

    def feasible(end: int) -> bool:
        for u in range(n):
            if on_path[u]:
                continue
            free = sum(1 for w in adj[u] if not on_path[w] or w == end or w == 0)
            if free < 2:
                return False
        return True

    def extend(end: int) -> bool:
        if len(path) == n:
            return 0 in adj[end]
        for w in adj[end]:
            if on_path[w]:
                continue
            on_path[w] = True
            path.append(w)
            if feasible(w) and extend(w):
                return True
            path.pop()
            on_path[w] = False
        return False

    if extend(0):
        return OrientedCycle(tuple(path))
    return None


# cycle enumeration ------------------------------------------------------------


def enumerate_cycles(g: Graph) -> Iterator[OrientedCycle]:
    """Every cycle exactly once: least vertex first, smaller neighbour second."""
    if g.n > ENUMERATION_MAX_ORDER:
        raise BudgetExceeded("cycle-enumeration", ENUMERATION_MAX_ORDER, g.n)
    adj = [sorted(g.neighbors(v)) for v in range(g.n)]
    for start in range(g.n):
        path = [start]
        used = {start}
        stack = [iter(w for w in adj[start] if w > start)]
        while stack:
            w = next(stack[-1], None)
            if w is None:
                stack.pop()
                used.discard(path.pop())
                continue
            if w in used:
                continue
            path.append(w)
            used.add(w)
            if len(path) >= 3 and start in adj[w] and path[1] < w:
                yield OrientedCycle(tuple(path))
            stack.append(iter(u for u in adj[w] if u > start))


def _cycle_table(g: Graph) -> list[int]:
    if g.n > ENUMERATION_MAX_ORDER:
        raise BudgetExceeded("cycle-enumeration", ENUMERATION_MAX_ORDER, g.n)
    return kernels.cycle_table(g.rows, g.n)


def cycle_vertex_sets(g: Graph, table: Optional[list[int]] = None) -> list[int]:
    """Masks ``U`` such that some cycle of ``g`` has vertex set exactly ``U``."""
    if table is None:
        table = _cycle_table(g)
    rows = g.rows
    out = []
    for mask in range(7, 1 << g.n):
        low = mask & -mask
        if mask != low and table[mask] & rows[low.bit_length() - 1] and popcount(mask) >= 3:
            out.append(mask)
    return out


def least_cycle_on(g: Graph, mask: int, table: Optional[list[int]] = None) -> OrientedCycle:
    """Lexicographically least cycle whose vertex set is exactly ``mask``."""
    if table is None:
        table = _cycle_table(g)
    low = mask & -mask
    start = low.bit_length() - 1
    if popcount(mask) < 3 or not table[mask] & g.rows[start]:
        raise CycleError("no cycle spans this vertex set")
    seq = [start]
    remaining = mask ^ low
    prev = start
    while remaining:
        # next vertex must still leave a path back to start through the rest
        cand = g.rows[prev] & remaining & table[remaining | low]
        b = cand & -cand
        prev = b.bit_length() - 1
        seq.append(prev)
        remaining ^= b
    return OrientedCycle(tuple(seq))


# D_lambda cycles --------------------------------------------------------------


@dataclass(frozen=True)
class DCycleReport:
    """A D_lambda-cycle with the shape of what it leaves behind.

    ``c_vector`` is ``(c_lambda, ..., c_1)`` of ``G - V(C)``, where ``c_k``
    counts components of order at least ``k``.
    """

    lam: int
    cycle: OrientedCycle
    leftover_profile: tuple[int, ...]
    c_vector: tuple[int, ...]

    @property
    def leftover_components(self) -> int:
        return len(self.leftover_profile)


def _c_vector(orders: Sequence[int], lam: int) -> tuple[int, ...]:
    return tuple(sum(1 for o in orders if o >= k) for k in range(lam, 0, -1))


def _leftover_orders(g: Graph, mask: int) -> list[int]:
    return sorted((popcount(c) for c in component_masks(g, mask)), reverse=True)


def _best_d_cycle(g: Graph, table: list[int], candidates: list[tuple[int, list[int]]], lam: int) -> DCycleReport:
    # lexicographically least (c_lam..c_1), then longest, then least vertex sequence
    keyed = [(_c_vector(orders, lam), -popcount(mask), mask, orders) for mask, orders in candidates]
    top = min(k[:2] for k in keyed)
    tied = [k for k in keyed if k[:2] == top]
    best = min(tied, key=lambda k: least_cycle_on(g, k[2], table).order)
    cvec, _, mask, orders = best
    return DCycleReport(lam, least_cycle_on(g, mask, table), tuple(orders), cvec)


def _d_lambda_scan(g: Graph):
    table = _cycle_table(g)
    sets = cycle_vertex_sets(g, table)
    if not sets:
        raise AcyclicGraphError("the graph has no cycle")
    scored = []
    for mask in sets:
        orders = _leftover_orders(g, mask)
        scored.append((mask, orders, (orders[0] if orders else 0) + 1))
    return table, scored


def smallest_d_lambda(g: Graph) -> DCycleReport:
    """Least ``lambda`` for which ``g`` has a D_lambda-cycle, with a witness.

    ``lambda == 1`` exactly when ``g`` is hamiltonian.
    """
    table, scored = _d_lambda_scan(g)
    lam = min(s[2] for s in scored)
    return _best_d_cycle(g, table, [(m, o) for m, o, l in scored if l <= lam], lam)


def minimizing_d_cycle(g: Graph, s: int) -> DCycleReport:
    """A D_{s+1}-cycle minimising ``(c_s, ..., c_1)`` lexicographically.

    Requires that ``g`` has a D_{s+1}-cycle and no D_s-cycle.
    """
    if s < 1:
        raise PreconditionError("s must be at least 1")
    table, scored = _d_lambda_scan(g)
    lam = min(x[2] for x in scored)
    if lam != s + 1:
        raise PreconditionError(f"least lambda is {lam}, need a D_{s + 1}-cycle and no D_{s}-cycle")
    return _best_d_cycle(g, table, [(m, o) for m, o, l in scored if l <= s + 1], s + 1)


# splicing ---------------------------------------------------------------------


class SpliceError(CycleError):
    pass


@dataclass(frozen=True)
class Arc:
    """Walk the base cycle from ``start`` to ``end``, forward or backward."""

    start: int
    end: int
    forward: bool = True


@dataclass(frozen=True)
class Through:
    """Explicit vertices, typically off the base cycle, visited in order."""

    vertices: tuple[int, ...]

    def __init__(self, *vertices: int):
        object.__setattr__(self, "vertices", tuple(vertices))


Step = Union[Arc, Through]


def splice(g: Graph, base: OrientedCycle, program: Sequence[Step]) -> OrientedCycle:
    """Concatenate arcs of ``base`` and explicit paths into a new cycle.

    Each junction between consecutive vertices, including the closing one,
    must be an edge of ``g``; no vertex may repeat.
    """
    seq: list[int] = []
    for step in program:
        if isinstance(step, Arc):
            seq.extend(base.arc(step.start, step.end, step.forward))
        elif isinstance(step, Through):
            seq.extend(step.vertices)
        else:
            raise SpliceError(f"unknown step {step!r}")
    if len(set(seq)) != len(seq):
        raise SpliceError("the program visits a vertex twice")
    if len(seq) < 3:
        raise SpliceError("the program does not close into a cycle")
    for i, u in enumerate(seq):
        v = seq[(i + 1) % len(seq)]
        if not g.has_edge(u, v):
            if i == len(seq) - 1:
                raise SpliceError(f"the program does not close: {u}{v} is not an edge")
            raise SpliceError(f"junction {u}{v} is not an edge")
    return OrientedCycle(tuple(seq))


# extension by one vertex --------------------------------------------------------


@dataclass(frozen=True)
class ExtendedCycle:
    cycle: OrientedCycle
    rule: str
    anchors: tuple[int, ...]


@dataclass(frozen=True)
class ToughnessContradiction:
    """An independent set larger than ``n/(t+1)``: the supplied ``t`` exceeds ``tau``."""

    independent_set: frozenset[int]
    bound: Fraction


def extend_cycle(
    g: Graph, c: OrientedCycle, x: int, t: Rational
) -> Union[ExtendedCycle, ToughnessContradiction]:
    """Absorb an off-cycle vertex ``x`` with ``deg(x, C) > n/(t+1) - 1``.

    Tries, in order: insert ``x`` between consecutive cycle neighbours
    ``u, u+``; otherwise reroute through a chord ``u+ v+`` for neighbours
    ``u < v`` as ``x u <-C v+ u+ C-> v x``. If both fail, ``{x} + N_C(x)^+``
    is independent and is returned instead.
    """
    t = as_rational(t)
    c.validate(g)
    if x in c:
        raise PreconditionError(f"vertex {x} already lies on the cycle")
    on_cycle = sorted(v for v in g.neighbors(x) if v in c)
    deg = len(on_cycle)
    if t is not INF:
        p, q = t.numerator, t.denominator
        if not (deg + 1) * (p + q) > g.n * q:
            raise PreconditionError(f"deg(x, C) = {deg} does not exceed n/(t+1) - 1")
        bound = Fraction(g.n * q, p + q)
    else:
        bound = Fraction(0)
    nx = g.rows[x]
    for u in on_cycle:
        up = c.succ(u)
        if nx >> up & 1:
            i = c.index(u)
            new = c.order[: i + 1] + (x,) + c.order[i + 1 :]
            out = OrientedCycle(new)
            out.validate(g)
            return ExtendedCycle(out, "A", (u, up))
    for u, v in combinations(on_cycle, 2):
        up, vp = c.succ(u), c.succ(v)
        if g.has_edge(up, vp):
            new = (x,) + c.arc(u, vp, forward=False) + c.arc(up, v, forward=True)
            out = OrientedCycle(new)
            out.validate(g)
            return ExtendedCycle(out, "B", (u, v))
    witness = frozenset([x] + [c.succ(u) for u in on_cycle])
    return ToughnessContradiction(witness, bound)
