"""Command-line entry point.

Exit status: 0 when no violation was found, 1 when one was, 2 for usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from toughore.backend import BACKEND
from toughore.conditions import min_degree, sigma2
from toughore.cycles import hamilton_cycle, smallest_d_lambda
from toughore.errors import BudgetExceeded, PreconditionError
from toughore.extremal import certify_extremal_properties, family_members, generate_family, membership
from toughore.generate import graphs
from toughore.graph import GraphError
from toughore.graph6 import Graph6Error, parse_graph6, to_graph6
from toughore.rational import format_rational
from toughore.toughness import toughness_exact
from toughore.verify import CHECKS, parse_checks, sweep

log = logging.getLogger("toughore")

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def _dump(obj, stream=None) -> None:
    stream = stream or sys.stdout
    stream.write(json.dumps(obj, separators=(",", ":")) + "\n")


def cmd_verify(args) -> int:
    checks = parse_checks(",".join([args.checks] + args.check))
    if args.input == "-":
        source = sys.stdin
    else:
        try:
            source = open(args.input, encoding="ascii")
        except OSError as exc:
            log.error("cannot read %s: %s", args.input, exc)
            return EXIT_USAGE
    out = open(args.report, "w", encoding="ascii") if args.report else sys.stdout
    try:
        summary = sweep(source, checks, args.jobs, emit=lambda rec: _dump(rec, out))
        if args.summary:
            with open(args.summary, "w", encoding="ascii") as fh:
                _dump(summary.to_dict(include_elapsed=True), fh)
        else:
            # timing stays out of the report so reports are byte-identical
            _dump(summary.to_dict(include_elapsed=False), out)
    finally:
        if source is not sys.stdin:
            source.close()
        if out is not sys.stdout:
            out.close()
    log.info("%d records in %.2fs (%s kernels)", summary.records, summary.elapsed, BACKEND)
    for item in summary.invalid:
        log.warning("line %d: %s", item["line"], item["error"])
    if summary.violations:
        return EXIT_VIOLATION
    if summary.invalid or summary.errors or summary.budget_trips:
        return EXIT_USAGE
    return EXIT_OK


def cmd_toughness(args) -> int:
    g = parse_graph6(args.g6)
    tau, witness = toughness_exact(g)
    _dump({
        "g6": args.g6,
        "tau": format_rational(tau),
        "cutset": sorted(witness.cutset) if witness else None,
        "components": witness.component_count if witness else None,
    })
    return EXIT_OK


def cmd_hamilton(args) -> int:
    g = parse_graph6(args.g6)
    c = hamilton_cycle(g)
    _dump({"g6": args.g6, "hamiltonian": c is not None, "cycle": list(c.order) if c else None})
    return EXIT_OK


def cmd_sigma2(args) -> int:
    g = parse_graph6(args.g6)
    _dump({"g6": args.g6, "sigma2": format_rational(sigma2(g)), "delta": min_degree(g)})
    return EXIT_OK


def cmd_dlambda(args) -> int:
    g = parse_graph6(args.g6)
    rep = smallest_d_lambda(g)
    _dump({
        "g6": args.g6,
        "lambda": rep.lam,
        "cycle": list(rep.cycle.order),
        "leftover_profile": list(rep.leftover_profile),
        "c_vector": list(rep.c_vector),
    })
    return EXIT_OK


def cmd_extremal_gen(args) -> int:
    if args.core_index is not None:
        print(to_graph6(generate_family(args.n, args.core_index)))
    else:
        for g in family_members(args.n):
            print(to_graph6(g))
    return EXIT_OK


def cmd_extremal_check(args) -> int:
    g = parse_graph6(args.g6)
    cert = membership(g)
    out = {"g6": args.g6, "member": cert is not None, "certificate": None, "properties": None}
    code = EXIT_OK
    if cert is not None:
        props = certify_extremal_properties(g)
        out["certificate"] = {"independent": sorted(cert.independent_part), "core": sorted(cert.core_part)}
        out["properties"] = {
            "tau": format_rational(props.tau),
            "sigma2": format_rational(props.sigma2),
            "hamiltonian": props.hamiltonian,
            "verdict": props.verdict.value,
            "checks": props.checks,
        }
        if not props.passed:
            code = EXIT_VIOLATION
    _dump(out)
    return code


def cmd_generate(args) -> int:
    for g in graphs(args.n, connected=args.connected, biconnected=args.biconnected):
        print(to_graph6(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toughore", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify every graph of a graph6 stream")
    p.add_argument("--input", default="-", help="graph6 file, or - for stdin")
    p.add_argument("--checks", default="main",
                   help=f"comma-separated subset of {','.join(CHECKS)}")
    p.add_argument("--check", action="append", default=[], help="add one check (repeatable)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", help="JSON-lines output file (default stdout)")
    p.add_argument("--summary", help="write the summary object here instead of the report tail")
    p.set_defaults(func=cmd_verify)

    for name, func, help_text in (
        ("toughness", cmd_toughness, "exact toughness with a witness cutset"),
        ("hamilton", cmd_hamilton, "Hamilton cycle or its absence"),
        ("sigma2", cmd_sigma2, "sigma2 and minimum degree"),
        ("dlambda", cmd_dlambda, "least lambda with a D_lambda-cycle"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--g6", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("extremal", help="extremal family tools")
    esub = p.add_subparsers(dest="extremal_command", required=True)
    e = esub.add_parser("gen", help="emit family members as graph6")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--core-index", type=int, help="bit i selects core edge i in combinations order")
    e.set_defaults(func=cmd_extremal_gen)
    e = esub.add_parser("check", help="membership certificate and extremal properties")
    e.add_argument("--g6", required=True)
    e.set_defaults(func=cmd_extremal_check)

    p = sub.add_parser("generate", help="one graph6 line per isomorphism class (n <= 10)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--biconnected", action="store_true")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (Graph6Error, GraphError, PreconditionError, BudgetExceeded, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
