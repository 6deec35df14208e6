"""``ggraph`` command-line entry point.

Exit codes: 0 success, 1 a claim failed (or ended in DISCREPANCY without
``--allow-discrepancy``), 2 bad input, 3 search budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analysis import analyze, clique_number
from .divisors import embed_in_cyclic, omega_via_divisors
from .errors import BudgetExceeded, GGraphError, InputError, OrderLimitExceeded, PreconditionFailed
from .graphs import EXPORT_FORMATS, GRAPH_KINDS, build_graph, export, from_json_dict
from .groups import cyclic
from .lattice import CyclicLattice
from .simple import DEFAULT_SCAN, psl2_null_predicate, psl2_nullness_scan
from .specs import build_group
from .verify import CLAIMS, Outcome, verify

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
CLIQUE_CROSSCHECK_MAX = 2000


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True, default=str))


def cmd_build(args) -> int:
    G = build_group(args.spec)
    g = build_graph(CyclicLattice(G), args.kind)
    data = export(g, args.format)
    if args.out and args.out != "-":
        Path(args.out).write_bytes(data)
    else:
        sys.stdout.write(data.decode())
        if not data.endswith(b"\n"):
            sys.stdout.write("\n")
    print(f"{G.name} {args.kind}: {g.n} vertices, {g.edge_count()} edges", file=sys.stderr)
    return EXIT_OK


def cmd_analyze(args) -> int:
    G = build_group(args.spec)
    g = build_graph(CyclicLattice(G), args.kind)
    summary = {"group": G.name, "order": G.order, "kind": args.kind, "vertices": g.n, "edges": g.edge_count()}
    summary.update(analyze(g).summary())
    _print_json(summary)
    return EXIT_OK


def _exit_for(outcomes: list[Outcome], allow_discrepancy: bool) -> int:
    if Outcome.FAIL in outcomes:
        return EXIT_FAIL
    if Outcome.UNKNOWN in outcomes:
        return EXIT_BUDGET
    if Outcome.DISCREPANCY in outcomes and not allow_discrepancy:
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    claims = list(CLAIMS) if args.claim == "all" else [args.claim]
    reports = []
    for cid in claims:
        kw = {"out_dir": args.out_dir} if cid == "m11" and args.out_dir else {}
        r = verify(cid, args.max_order, **kw)
        reports.append(r)
        print(f"{r.claim_id}: {r.outcome.value} ({r.runtime_ms} ms)", file=sys.stderr)
    payload = [r.to_dict() for r in reports]
    _print_json(payload[0] if len(payload) == 1 else payload)
    return _exit_for([r.outcome for r in reports], args.allow_discrepancy)


def cmd_clique(args) -> int:
    results = omega_via_divisors(args.n, args.kind)
    out = {"n": args.n, "kind": args.kind,
           "divisor_search": [{"objective": r.objective, "value": r.value, "witness": r.witness} for r in results]}
    if args.n <= CLIQUE_CROSSCHECK_MAX:
        lat = CyclicLattice(cyclic(args.n))
        g = build_graph(lat, args.kind)
        out["exact_omega"] = clique_number(g)
    _print_json(out)
    return EXIT_OK


def cmd_embed(args) -> int:
    with open(args.file) as fh:
        g = from_json_dict(json.load(fh))
    emb = embed_in_cyclic(g)
    _print_json({
        "vertices": g.n,
        "edges": g.edge_count(),
        "prime_assignment": [{"element": list(k), "prime": p} for k, p in emb.primes.items()],
        "divisors": [
            {"vertex": v, "primes": sorted(p for p, e in zip(d.primes, d.exponents) if e)}
            for v, d in enumerate(emb.divisors)
        ],
        "verified": emb.verified,
    })
    return EXIT_OK if emb.verified else EXIT_FAIL


def cmd_psl_scan(args) -> int:
    qs = [q for q in DEFAULT_SCAN if q <= args.qmax]
    rows = psl2_nullness_scan(qs)
    out = []
    for r in rows:
        v = psl2_null_predicate(r.q)
        out.append({"q": r.q, "lower": v.lower, "upper": v.upper, "predicate": r.predicate,
                    "computed_null": r.computed_null, "edges": r.edges, "agree": r.agree})
    _print_json(out)
    return EXIT_OK if all(r.agree for r in rows) else EXIT_FAIL


def cmd_m11(args) -> int:
    r = verify("m11", out_dir=args.out_dir)
    _print_json(r.to_dict())
    return _exit_for([r.outcome], True)


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ggraph", description="Power, intersection power and difference graphs of finite groups.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="write one graph of a group")
    b.add_argument("spec", help='group spec, e.g. "Z(12)" or "Z(3) x Q(8)"')
    b.add_argument("--kind", choices=GRAPH_KINDS, default="diff")
    b.add_argument("--format", choices=EXPORT_FORMATS, default="json")
    b.add_argument("--out", default="-", help="output path, '-' for stdout")
    b.set_defaults(func=cmd_build)

    a = sub.add_parser("analyze", help="components, diameter, girth, bipartiteness, degree parity")
    a.add_argument("spec")
    a.add_argument("--kind", choices=GRAPH_KINDS, default="diff")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="sweep a registered claim over its catalog")
    v.add_argument("claim", choices=["all", *CLAIMS], metavar="claim", help=f"one of: all, {', '.join(CLAIMS)}")
    v.add_argument("--max-order", type=int, default=None, help="override the sweep's order bound")
    v.add_argument("--allow-discrepancy", action="store_true", help="exit 0 on documented discrepancies")
    v.add_argument("--out-dir", default=None, help="where the m11 claim writes its graph files")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("clique", help="clique number of a cyclic-group graph via divisor families")
    c.add_argument("n", type=int)
    c.add_argument("--kind", choices=("power", "ipg", "diff"), default="diff")
    c.set_defaults(func=cmd_clique)

    e = sub.add_parser("embed", help="embed a graph (JSON) into the difference graph of a cyclic group")
    e.add_argument("file")
    e.set_defaults(func=cmd_embed)

    s = sub.add_parser("psl-scan", help="PSL(2,q) nullness against the arithmetic predicate")
    s.add_argument("--qmax", type=int, default=25)
    s.set_defaults(func=cmd_psl_scan)

    m = sub.add_parser("m11", help="twin-reduced difference graph of M11")
    m.add_argument("--out-dir", default=".", help="directory for m11_reduced.json and .dot")
    m.set_defaults(func=cmd_m11)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, OrderLimitExceeded, PreconditionFailed, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
