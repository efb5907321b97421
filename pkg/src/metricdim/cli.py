"""Command-line entry point: ``metricdim {build,check,solve,claims,table}``.

Exit codes: 0 success, 1 a checked claim or set predicate failed, 2 usage
error, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .claims import FAIL, SKIPPED, emit_table, find_claims, summary_table, verify_claims
from .errors import BudgetExceeded, GraphError
from .families import Built, build_family, parse_params, parse_vertex_set
from .graph import all_pairs_distances, write_edge_list
from .kernel import doubly_violation, representation, resolving_violation, strong_violation
from .namedsets import build_named_set, parse_set_request
from .solvers import BUDGET_ENV, KINDS, solve

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

GRAPH_HELP = "family spec: cycle:n=N | path:k=K | cp:n=N,k=K | cpm:n=N,k=K,m=M | h:n=N | l:n=N | file:PATH"

SET_GRAMMAR = """\
set literals (comma separated):
  xT       vertex x_T of a layered product (copy 1)
  xT:R     vertex x_T in copy R, e.g. x16:4
  vR       point v_R of H(n)
  vIvJ     pair vertex v_Iv_J of H(n), e.g. v1v3
  w:R,S    vertex {v_R, v_Rv_S} of L(n), e.g. w:2,13 is {v2, v2v13}
  #I       raw 0-based vertex index
  LABEL    any exact vertex label, e.g. {v1, v1v2}
named sets (--named): M1 N1 A1 B1 C1 D1 E1..E4 E T on layered products,
  R1 R2 P P1 T1 on H(n), C1 C2 C3 N1 W1 on L(n); parameters after a colon,
  e.g. D1:i=1, A:i=2,r=2, R1:omit=3
"""


class _UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "human"), default="json")
    common.add_argument("--no-timing", action="store_true", help="omit elapsed times for byte-stable output")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--budget", type=int, default=None,
                        help=f"candidate evaluations before giving up (default 10^8, env {BUDGET_ENV})")
    search.add_argument("--jobs", type=int, default=1, help="worker processes for enumeration")

    p = argparse.ArgumentParser(
        prog="metricdim",
        description="Exact metric, doubly resolving and strong dimension on small graph families.",
        epilog=SET_GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", parents=[common], help="emit a graph as an edge list")
    b.add_argument("--graph", required=True, help=GRAPH_HELP)
    b.add_argument("--out", default="-", help="output path, - for stdout")
    b.add_argument("--labels", action="store_true", help="always write label lines")

    c = sub.add_parser("check", parents=[common], help="test a vertex set against a predicate",
                       epilog=SET_GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)
    c.add_argument("--kind", required=True, choices=KINDS)
    c.add_argument("--graph", required=True, help=GRAPH_HELP)
    group = c.add_mutually_exclusive_group(required=True)
    group.add_argument("--set", dest="vset", help="set literal, e.g. x1,x3,x16:1,x16:4")
    group.add_argument("--named", help="named set, e.g. D1:i=1")

    s = sub.add_parser("solve", parents=[common, search], help="exact minimum set of a kind")
    s.add_argument("--kind", required=True, choices=KINDS)
    s.add_argument("--graph", required=True, help=GRAPH_HELP)
    s.add_argument("--method", choices=("vertex-cover", "enumeration"), default=None,
                   help="strong kind only: SR-graph cover (default) or direct enumeration")

    cl = sub.add_parser("claims", parents=[common, search], help="machine-check the claim registry")
    sel = cl.add_mutually_exclusive_group()
    sel.add_argument("--all", action="store_true", help="every claim (the default)")
    sel.add_argument("--id", action="append", help="claim id, repeatable; a bare id such as Thm3.1 also selects Thm3.1-*")
    sel.add_argument("--list", action="store_true", help="list claim ids and exit")
    cl.add_argument("--params", help="override the default cases with one case, e.g. n=9")
    cl.add_argument("--slow", action="store_true", help="include the slow cases")

    t = sub.add_parser("table", parents=[common], help="representation table of a named set")
    t.add_argument("--graph", required=True, help=GRAPH_HELP)
    t.add_argument("--set", dest="vset", required=True, help="named set, e.g. D1:i=1")
    t.add_argument("--out", default="-")
    return p


def _write(text: str, out: str = "-") -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _graph(spec: str) -> Built:
    try:
        return build_family(spec)
    except FileNotFoundError as exc:
        raise _UsageError(f"--graph: {exc}") from None
    except GraphError as exc:
        raise _UsageError(f"--graph {spec!r}: {exc}") from None


def _cmd_build(args) -> int:
    built = _graph(args.graph)
    _write(write_edge_list(built.graph, True if args.labels else None), args.out)
    return EXIT_OK


def _cmd_check(args) -> int:
    built = _graph(args.graph)
    try:
        if args.named:
            name, params = parse_set_request(args.named)
            q = build_named_set(name, params, built.context)
        else:
            q = parse_vertex_set(args.vset, built)
    except GraphError as exc:
        raise _UsageError(f"--{'named' if args.named else 'set'}: {exc}") from None
    d = all_pairs_distances(built.graph)
    labels = built.graph.labels
    fn = {"resolving": resolving_violation, "doubly": doubly_violation, "strong": strong_violation}[args.kind]
    try:
        v = fn(q, d)
    except GraphError as exc:
        raise _UsageError(str(exc)) from None
    out: dict = {"kind": args.kind, "graph": str(built.spec), "set": [labels[x] for x in q], "verdict": v is None}
    if v is not None:
        out["violating_pair"] = [labels[v[0]], labels[v[1]]]
        out["representations"] = [list(representation(v[0], q, d)), list(representation(v[1], q, d))]
        if args.kind == "doubly":
            out["lambda"] = v[2]
    if args.format == "json":
        _emit(out)
    else:
        verb = "is" if v is None else "is NOT"
        print(f"{{{', '.join(out['set'])}}} {verb} {args.kind} on {out['graph']}")
        if v is not None:
            a, b = out["violating_pair"]
            ra, rb = out["representations"]
            print(f"  r({a}) = {tuple(ra)}, r({b}) = {tuple(rb)}")
    return EXIT_OK if v is None else EXIT_FAIL


def _cmd_solve(args) -> int:
    built = _graph(args.graph)
    kwargs = {"jobs": args.jobs}
    if args.method:
        if args.kind != "strong":
            raise _UsageError("--method applies to --kind strong only")
        kwargs["method"] = args.method
    labels = built.graph.labels
    timing = not args.no_timing
    try:
        res = solve(args.kind, built.graph, args.budget, **kwargs)
    except BudgetExceeded as exc:
        out = {"kind": args.kind, "graph": str(built.spec), "error": "budget exceeded", "message": str(exc)}
        if exc.best is not None:
            out["upper_bound"] = exc.best.as_dict(labels, timing)
        if args.format == "json":
            _emit(out)
        else:
            print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    body = res.as_dict(labels, timing)
    if args.format == "json":
        _emit({"graph": str(built.spec), **body})
    else:
        symbol = {"resolving": "beta", "doubly": "psi", "strong": "sdim"}[args.kind]
        print(f"{symbol}({built.spec}) = {res.size}")
        print(f"  witness: {{{', '.join(body['witness'])}}}")
        print(f"  certified: {res.certificate_checked}  method: {res.method}  nodes: {res.nodes_explored}")
    return EXIT_OK


def _cmd_claims(args) -> int:
    if args.list:
        for c in find_claims():
            print(f"{c.id}\t{c.family}\t{c.quantity}\t{c.statement}")
        return EXIT_OK
    try:
        params = parse_params(args.params) if args.params else None
        reports = verify_claims(args.id, args.budget, params=params, slow=args.slow, jobs=args.jobs)
    except KeyError as exc:
        raise _UsageError(f"--id: {exc.args[0]}") from None
    except GraphError as exc:
        raise _UsageError(f"--params: {exc}") from None
    timing = not args.no_timing
    if args.format == "json":
        for r in reports:
            sys.stdout.write(r.to_json(timing) + "\n")
        sys.stderr.write(summary_table(reports))
    else:
        sys.stdout.write(summary_table(reports))
    if any(r.verdict == FAIL for r in reports):
        return EXIT_FAIL
    if any(r.verdict == SKIPPED for r in reports):
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_table(args) -> int:
    built = _graph(args.graph)
    try:
        name, params = parse_set_request(args.vset)
        text = emit_table(built, name, params)
    except GraphError as exc:
        raise _UsageError(f"--set: {exc}") from None
    _write(text, args.out)
    return EXIT_OK


_COMMANDS = {
    "build": _cmd_build,
    "check": _cmd_check,
    "solve": _cmd_solve,
    "claims": _cmd_claims,
    "table": _cmd_table,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"metricdim {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
