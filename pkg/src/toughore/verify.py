"""Per-graph verification records and the ordered, parallel graph6 sweep."""

from __future__ import annotations

import enum
import time
from collections import Counter, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional

from toughore.conditions import (
    Verdict,
    check_lemma1,
    compare_bauer_bound,
    compare_dirac_bound,
    compare_main_bound,
    compare_ore_bound,
    min_degree,
    sigma2,
)
from toughore.cycles import hamilton_cycle
from toughore.errors import BudgetExceeded, PreconditionError
from toughore.extremal import membership
from toughore.graph import Graph, is_biconnected, is_connected
from toughore.graph6 import HEADER, Graph6Error, parse_graph6, to_graph6
from toughore.lemmas import VIOLATION, check_lemma_2_3, check_lemma_2_4
from toughore.rational import INF, format_rational
from toughore.toughness import toughness_exact

CHECKS = ("main", "bauer", "ore", "dirac", "lemma1", "lemma3", "lemma4")
BATCH_SIZE = 64


class Classification(str, enum.Enum):
    STRICT = "strict-satisfies->hamiltonian-ok"
    EQUALITY_NONHAMILTONIAN = "equality-nonhamiltonian->in-H"
    EQUALITY_HAMILTONIAN = "equality-hamiltonian"
    BELOW = "below-bound"
    VACUOUS = "vacuous"
    VIOLATION = "violation"


def parse_checks(selection) -> frozenset[str]:
    if isinstance(selection, str):
        items = [s.strip() for s in selection.split(",") if s.strip()]
    else:
        items = list(selection)
    unknown = sorted(set(items) - set(CHECKS))
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    return frozenset(items)


@dataclass
class VerificationRecord:
    g6: str
    n: int
    tau: object
    sigma2: object
    delta: int
    hamiltonian: bool
    cycle: Optional[tuple[int, ...]]
    verdict_main: Verdict
    classification: Classification
    extremal: Optional[dict]
    checks: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    tau_cutset: Optional[list] = None
    line: Optional[int] = None

    def to_dict(self) -> dict:
        out = {}
        if self.line is not None:
            out["line"] = self.line
        out.update(
            g6=self.g6,
            n=self.n,
            tau=format_rational(self.tau),
            tau_cutset=self.tau_cutset,
            sigma2=format_rational(self.sigma2),
            delta=self.delta,
            hamiltonian=self.hamiltonian,
            cycle=list(self.cycle) if self.cycle else None,
            verdict_main=self.verdict_main.value,
            classification=self.classification.value,
            extremal=self.extremal,
            checks=self.checks,
            violations=self.violations,
        )
        return out


def _implies_hamiltonian(name: str, verdict: Verdict, ham: bool, sufficient, record) -> dict:
    entry = {"verdict": verdict.value}
    if verdict in sufficient and not ham:
        record.violations.append(f"{name}: bound satisfied but no Hamilton cycle")
    return entry


def verify_one(g: Graph, checks: Iterable[str] = ("main",), g6: Optional[str] = None) -> VerificationRecord:
    """Evaluate the selected statements on ``g`` at ``t = tau(g)``.

    Any failed implication is appended to ``record.violations``; budget
    overruns propagate as :class:`BudgetExceeded`.
    """
    checks = parse_checks(checks)
    n = g.n
    if n < 3:
        raise PreconditionError("verification needs n >= 3")
    tau, witness = toughness_exact(g)
    s2 = sigma2(g)
    delta = min_degree(g)
    cyc = hamilton_cycle(g)
    ham = cyc is not None
    cert = membership(g)
    main = compare_main_bound(s2, tau, n)
    verdict = main.verdict

    record = VerificationRecord(
        g6=g6 if g6 is not None else to_graph6(g),
        n=n,
        tau=tau,
        sigma2=s2,
        delta=delta,
        hamiltonian=ham,
        cycle=cyc.order if cyc else None,
        verdict_main=verdict,
        classification=Classification.VACUOUS,
        extremal=None
        if cert is None
        else {
            "independent": sorted(cert.independent_part),
            "core": sorted(cert.core_part),
        },
        tau_cutset=sorted(witness.cutset) if witness else None,
    )

    if verdict is Verdict.GREATER:
        if ham:
            record.classification = Classification.STRICT
        else:
            record.classification = Classification.VIOLATION
            record.violations.append("main(a): sigma2 above bound but no Hamilton cycle")
    elif verdict is Verdict.EQUAL:
        if ham:
            record.classification = Classification.EQUALITY_HAMILTONIAN
        elif cert is not None:
            record.classification = Classification.EQUALITY_NONHAMILTONIAN
        else:
            record.classification = Classification.VIOLATION
            record.violations.append("main(b): equality, nonhamiltonian, not in the family")
    elif verdict is Verdict.LESS:
        record.classification = Classification.BELOW

    if "main" in checks:
        entry = {"verdict": verdict.value}
        if main.bound is not None:
            entry["bound"] = format_rational(main.bound)
        record.checks["main"] = entry
    if "bauer" in checks:
        b = compare_bauer_bound(delta, tau, n)
        entry = _implies_hamiltonian("bauer", b.verdict, ham, {Verdict.GREATER}, record)
        if b.bound is not None:
            entry["bound"] = format_rational(b.bound)
        record.checks["bauer"] = entry
    if "ore" in checks:
        o = compare_ore_bound(s2, n)
        record.checks["ore"] = _implies_hamiltonian(
            "ore", o.verdict, ham, {Verdict.GREATER, Verdict.EQUAL}, record
        )
    if "dirac" in checks:
        d = compare_dirac_bound(delta, n, complete=s2 is INF)
        record.checks["dirac"] = _implies_hamiltonian(
            "dirac", d.verdict, ham, {Verdict.GREATER, Verdict.EQUAL}, record
        )
    if "lemma1" in checks:
        if s2 is INF or not is_connected(g):
            record.checks["lemma1"] = {"status": "n/a"}
        else:
            r = check_lemma1(g, tau)
            record.checks["lemma1"] = {
                "status": "pass" if r.holds else VIOLATION,
                "alpha": r.alpha,
                "bound": format_rational(r.bound),
                "tight": r.tight,
            }
            if not r.holds:
                record.violations.append(
                    f"lemma1: independent set {sorted(r.counterexample)} exceeds n/(t+1)"
                )
    for name, checker in (("lemma3", check_lemma_2_3), ("lemma4", check_lemma_2_4)):
        if name not in checks:
            continue
        if not is_biconnected(g):
            record.checks[name] = {"status": "n/a"}
            continue
        if ham:
            # a hamiltonian graph has a D_1-cycle, so neither lemma applies
            record.checks[name] = {"status": "vacuous"}
            continue
        rep = checker(g, tau)
        entry = {"status": rep.status, "tight": rep.tight, "parameter": rep.parameter,
                 "checked": rep.checked}
        record.checks[name] = entry
        if rep.status == VIOLATION:
            v = rep.violation
            record.violations.append(
                f"{name}: cycle {list(v.cycle.order)} violates the bound ({_plain(v.detail)})"
            )
    return record


def _plain(detail: dict) -> str:
    parts = []
    for k, v in detail.items():
        if hasattr(v, "numerator") and not isinstance(v, int):
            v = format_rational(v)
        parts.append(f"{k}={v}")
    return ", ".join(parts)


# streaming ---------------------------------------------------------------------


def _verify_line(lineno: int, text: str, checks: frozenset[str]) -> dict:
    try:
        g = parse_graph6(text)
    except Graph6Error as exc:
        return {"line": lineno, "error": f"invalid graph6: {exc}"}
    token = text.strip()
    if token.startswith(HEADER):
        token = token[len(HEADER):]
    try:
        record = verify_one(g, checks, g6=token)
    except BudgetExceeded as exc:
        return {"line": lineno, "g6": token, "n": g.n, "error": str(exc), "budget": exc.budget}
    except PreconditionError as exc:
        return {"line": lineno, "g6": token, "n": g.n, "error": str(exc)}
    record.line = lineno
    return record.to_dict()


def _verify_batch(batch: list[tuple[int, str]], checks: frozenset[str]) -> list[dict]:
    return [_verify_line(i, text, checks) for i, text in batch]


def _numbered(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    for i, line in enumerate(lines, 1):
        text = line.strip()
        if not text or text == HEADER:
            continue
        yield i, text


def _batches(items: Iterator[tuple[int, str]], size: int) -> Iterator[list[tuple[int, str]]]:
    batch = []
    for item in items:
        batch.append(item)
        if len(batch) == size:
            yield batch
            batch = []
    if batch:
        yield batch


def verify_stream(lines: Iterable[str], checks: Iterable[str] = ("main",), jobs: int = 1) -> Iterator[dict]:
    """Yield one record per non-blank input line, in input order.

    With ``jobs > 1`` batches run in worker processes; a bounded window of
    in-flight batches is drained front to back, which restores input order.
    """
    checks = parse_checks(checks)
    numbered = _numbered(lines)
    if jobs <= 1:
        for i, text in numbered:
            yield _verify_line(i, text, checks)
        return
    window = 4 * jobs
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        pending: deque = deque()
        for batch in _batches(numbered, BATCH_SIZE):
            pending.append(pool.submit(_verify_batch, batch, checks))
            if len(pending) >= window:
                yield from pending.popleft().result()
        while pending:
            yield from pending.popleft().result()


@dataclass
class SweepSummary:
    records: int = 0
    totals: Counter = field(default_factory=Counter)
    violations: list = field(default_factory=list)
    invalid: list = field(default_factory=list)
    errors: list = field(default_factory=list)
    budget_trips: list = field(default_factory=list)
    statuses: dict = field(default_factory=dict)
    tight: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def add(self, rec: dict) -> None:
        self.records += 1
        if "error" in rec:
            if "budget" in rec:
                self.budget_trips.append({"line": rec["line"], "budget": rec["budget"]})
            elif "g6" in rec:
                self.errors.append({"line": rec["line"], "error": rec["error"]})
            else:
                self.invalid.append({"line": rec["line"], "error": rec["error"]})
            return
        self.totals[rec["classification"]] += 1
        if rec["violations"]:
            self.violations.append(rec)
        for name, entry in rec["checks"].items():
            status = entry.get("status")
            if status is not None:
                self.statuses.setdefault(name, Counter())[status] += 1
            if entry.get("tight"):
                self.tight.setdefault(name, []).append(rec["g6"])

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self, include_elapsed: bool = True) -> dict:
        out = {
            "summary": True,
            "records": self.records,
            "totals": dict(sorted(self.totals.items())),
            "violations": len(self.violations),
            "violating_lines": [r.get("line") for r in self.violations],
            "invalid_lines": self.invalid,
            "errors": self.errors,
            "budget_trips": self.budget_trips,
            "statuses": {k: dict(sorted(v.items())) for k, v in sorted(self.statuses.items())},
            "tight": {k: len(v) for k, v in sorted(self.tight.items())},
        }
        if include_elapsed:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        return out


def sweep(
    lines: Iterable[str],
    checks: Iterable[str] = ("main",),
    jobs: int = 1,
    emit: Optional[Callable[[dict], None]] = None,
) -> SweepSummary:
    """Run :func:`verify_stream` to completion, aggregating a summary."""
    summary = SweepSummary()
    start = time.perf_counter()
    for rec in verify_stream(lines, checks, jobs):
        summary.add(rec)
        if emit is not None:
            emit(rec)
    summary.elapsed = time.perf_counter() - start
    return summary
