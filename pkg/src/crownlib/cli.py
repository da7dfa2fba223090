"""Command-line entry point: ``crownlib <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
Graph files use the ``.l3g`` format; ``-`` means stdin/stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, catalog, verification
from .constructions import ConstructionSpec
from .core import parse, serialize, triple
from .errors import BudgetExceeded, CrownlibError
from .links import find_crown, link_graph
from .search import DEFAULT_NODE_BUDGET, THEOREM2, SearchConfig, ex_crown, verify_bounds

RESTRICTION_SETS = {"thm2": THEOREM2}


class UsageError(Exception):
    pass


def _globals(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # Subparsers suppress their defaults so a flag given before the
    # subcommand is not reset by the subparser.
    s = argparse.SUPPRESS
    parser.add_argument("--seed", type=int, default=s if suppress else 0,
                        help="seed for every randomized path")
    parser.add_argument("--threads", type=int, default=s if suppress else 1,
                        help="worker processes for parallel internals")
    parser.add_argument("--format", choices=("json", "table"), default=s if suppress else "table")


def _budget(text: str) -> int:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if value < 1 or value != int(value):
        raise argparse.ArgumentTypeError(f"budget must be a positive integer: {text!r}")
    return int(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crownlib", description=__doc__.splitlines()[0])
    _globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        _globals(p, suppress=True)
        return p

    def graph_arg(p):
        p.add_argument("--graph", required=True, metavar="FILE", help=".l3g file or '-'")

    p = add("verify", help_text="run verification campaigns")
    p.add_argument("what", choices=("all",))

    p = add("catalog", help_text="link-graph catalog")
    csub = p.add_subparsers(dest="action", required=True)
    q = csub.add_parser("verify", help="enumerate <4,4,4> links and match the builtins")
    _globals(q, suppress=True)
    q = csub.add_parser("show", help="print a builtin colored graph")
    _globals(q, suppress=True)
    q.add_argument("name")

    p = add("construct", help_text="build a graph")
    p.add_argument("--kind", required=True, choices=ConstructionSpec.KINDS)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--min-degree", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("-o", "--out", default="-", metavar="FILE")

    p = add("link", help_text="colored link graphs")
    lsub = p.add_subparsers(dest="action", required=True)
    q = lsub.add_parser("show", help="print the link graph of an edge")
    _globals(q, suppress=True)
    graph_arg(q)
    q.add_argument("--edge", required=True, metavar="a,b,c")

    p = add("crown", help_text="crown detection")
    rsub = p.add_subparsers(dest="action", required=True)
    q = rsub.add_parser("find", help="print a crown or NONE")
    _globals(q, suppress=True)
    graph_arg(q)

    p = add("audit", help_text="audit the 3n/2 counting argument on a graph")
    graph_arg(p)

    p = add("critical", help_text="critical configurations")
    ksub = p.add_subparsers(dest="action", required=True)
    q = ksub.add_parser("scan", help="list <4,4,3> and <5,4,2> edges")
    _globals(q, suppress=True)
    graph_arg(q)

    p = add("g6", help_text="G6 exclusion")
    gsub = p.add_subparsers(dest="action", required=True)
    q = gsub.add_parser("verify", help="scan the saturated G6 host")
    _globals(q, suppress=True)

    p = add("search", help_text="extremal search")
    ssub = p.add_subparsers(dest="action", required=True)
    q = ssub.add_parser("ex", help="compute ex(n, crown)")
    _globals(q, suppress=True)
    q.add_argument("--n", type=int, required=True)
    mode = q.add_mutually_exclusive_group()
    mode.add_argument("--exact", dest="mode", action="store_const", const="exact")
    mode.add_argument("--heuristic", dest="mode", action="store_const", const="heuristic")
    q.add_argument("--budget-nodes", type=_budget,
                   help=f"default {DEFAULT_NODE_BUDGET:.0e} nodes (exact), 2000 steps (heuristic)")
    q.add_argument("--budget-seconds", type=float, default=600.0)
    q.add_argument("--restricted", choices=tuple(RESTRICTION_SETS))
    q.add_argument("--out", metavar="FILE")
    return parser


def _read_graph(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text)


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _emit(args, payload, table_lines) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in table_lines:
            print(line)


def _table(header, rows) -> list[str]:
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]


def cmd_verify(args) -> int:
    results = verification.run_all(seed=args.seed, threads=args.threads)
    ok = all(r.ok for r in results)
    payload = {"ok": ok, "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail}
                                    for r in results]}
    _emit(args, payload, _table(("check", "result"),
                                [(r.name, "PASS" if r.ok else "FAIL") for r in results]))
    return 0 if ok else 1


def cmd_catalog(args) -> int:
    if args.action == "show":
        try:
            entry = catalog.builtin(args.name)
        except KeyError:
            raise UsageError(f"unknown catalog graph {args.name!r}; known: "
                             f"{', '.join(catalog.NAMES)}") from None
        G = entry.graph
        payload = {"name": entry.name, "note": entry.source_note,
                   "edges": [[x, y, c.name] for (x, y), c in G.colored_edges]}
        _emit(args, payload, G.lines())
        return 0
    rows = catalog.verify_catalog()
    ok = len(rows) == 5 and all(r["matched"] for r in rows)
    _emit(args, {"classes": len(rows), "ok": ok, "rows": rows},
          _table(("name", "vertices", "edges", "matched"),
                 [(r["name"], r["vertices"], r["edges"], r["matched"]) for r in rows]))
    return 0 if ok else 1


def cmd_construct(args) -> int:
    params = {}
    if args.min_degree is not None:
        params["min_degree"] = args.min_degree
    if args.m is not None:
        params["m"] = args.m
    if args.kind == "random" and not params:
        raise UsageError("--kind random needs --min-degree or --m")
    H = ConstructionSpec(args.kind, args.n, args.seed, params).build()
    _write(args.out, serialize(H))
    return 0


def _parse_edge(text: str):
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"--edge expects a,b,c, got {text!r}") from None
    if len(parts) != 3:
        raise UsageError(f"--edge expects a,b,c, got {text!r}")
    return triple(*parts)


def cmd_link(args) -> int:
    H = _read_graph(args.graph)
    G = link_graph(H, _parse_edge(args.edge))
    payload = {"edge": list(G.host_edge),
               "edges": [[x, y, c.name] for (x, y), c in G.colored_edges]}
    _emit(args, payload, G.lines())
    return 0


def cmd_crown(args) -> int:
    H = _read_graph(args.graph)
    crown = find_crown(H)
    if crown is None:
        _emit(args, {"crown": None}, ["NONE"])
    else:
        _emit(args, {"crown": {"base": list(crown.base),
                               "jewels": [list(j) for j in crown.jewels]}},
              [" ".join(map(str, t)) for t in crown.edges()])
    return 0


def cmd_audit(args) -> int:
    H = _read_graph(args.graph)
    H0, removed = analysis.reduce_low_degree(H)
    if H0.n == 0:
        raise UsageError("graph reduces to nothing after deleting low-degree vertices")
    rep = analysis.audit_theorem2(H0)
    payload = rep.to_json()
    payload["removed"] = removed
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 1 if rep.violations else 0


def cmd_critical(args) -> int:
    H = _read_graph(args.graph)
    found = analysis.find_critical_configurations(H)
    payload = {"configurations": [
        {"center": list(c.center), "degree_vector": list(c.dv),
         "incident": [list(t) for t in c.incident]} for c in found]}
    _emit(args, payload, _table(("center", "dv", "incident"),
                                [(" ".join(map(str, c.center)), str(c.dv), len(c.incident))
                                 for c in found]) if found else ["NONE"])
    return 0


def cmd_g6(args) -> int:
    report, fixtures = analysis.g6_verify(args.threads)
    cases_ok = len(fixtures) == 4 and all(fx.crown is not None for fx in fixtures)
    ok = report.ok and cases_ok
    payload = report.to_json()
    payload["cases"] = [{"case": fx.case, "crown": [list(t) for t in fx.crown.edges()]}
                        for fx in fixtures]
    payload["ok"] = ok
    counts = report.counts()
    lines = [f"patterns {len(report.allowed_patterns)}"]
    lines += [f"{k} {v}" for k, v in counts.items()]
    lines += [f"allowed_outside_patterns {len(report.allowed_outside_patterns)}",
              f"capacity {report.capacity} (limit 16.5)",
              f"cases {'PASS' if cases_ok else 'FAIL'}",
              "PASS" if ok else "FAIL"]
    _emit(args, payload, lines)
    return 0 if ok else 1


def cmd_search(args) -> int:
    cfg = SearchConfig(
        args.n,
        mode=args.mode or "exact",
        restrictions=RESTRICTION_SETS.get(args.restricted, ()),
        node_budget=args.budget_nodes,
        time_budget_seconds=args.budget_seconds,
        seed=args.seed,
        threads=args.threads,
    )
    code = 0
    try:
        result = ex_crown(cfg)
    except BudgetExceeded as exc:
        result = exc.result
    payload = result.to_json()
    if args.out:
        _write(args.out, json.dumps(payload, indent=2, sort_keys=True) + "\n")
    if not verify_bounds(result):
        code = 1
    tag = "exact" if result.exact else "lower bound"
    _emit(args, payload, [f"n {result.n}", f"best {result.best} ({tag})",
                          f"nodes {result.nodes_explored}",
                          f"gap_to_3n_over_2 {result.gap_to_three_halves()}"])
    return code


COMMANDS = {
    "verify": cmd_verify,
    "catalog": cmd_catalog,
    "construct": cmd_construct,
    "link": cmd_link,
    "crown": cmd_crown,
    "audit": cmd_audit,
    "critical": cmd_critical,
    "g6": cmd_g6,
    "search": cmd_search,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, CrownlibError, ValueError) as exc:
        print(f"crownlib: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
