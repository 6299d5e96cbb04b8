"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 input parse error, 3 expectation
failure (``--expect-agreement`` with at least one disagreement).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import GraphError, ParseError, PolyCliqueError
from .flow import max_flow
from .graph import Graph, parse_dimacs
from .greedy import (
    BudgetVariant,
    audit_trace,
    decide,
    greedy_run,
    instance_with_budget,
    maximize,
)
from .harness import ExhaustiveMode, RandomMode, emit_report, hunt, verify_all_k
from .oracles import (
    DEFAULT_LIMIT,
    exact_min_interdicted_flow,
    max_clique_exact,
    wood_equivalence,
)
from .reduction import build_network

EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_EXPECTATION = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def read_graph(path: str) -> Graph:
    """Load a DIMACS file (or ``-`` for stdin); a leading ``{`` selects the JSON graph form."""
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        if text.lstrip().startswith("{"):
            return Graph.from_json(json.loads(text))
        return parse_dimacs(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON graph: {exc}") from exc
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def _dump(doc) -> str:
    return json.dumps(doc, separators=(",", ":"))


def _variant(args) -> BudgetVariant:
    return BudgetVariant(args.variant)


def cmd_decide(args, out):
    g = read_graph(args.input)
    outcome = decide(g, args.k, _variant(args))
    if args.trace:
        for step in outcome.trace.steps:
            print(_dump(step.to_json()), file=out)
    print(_dump(outcome.to_json()), file=out)
    return 0


def cmd_maximize(args, out):
    g = read_graph(args.input)
    res = maximize(g, _variant(args))
    print(_dump({"claimed_size": res.claimed_size, "per_k": [o.to_json() for o in res.per_k]}), file=out)
    return 0


def cmd_reduce(args, out):
    print(_dump(build_network(read_graph(args.input)).to_json()), file=out)
    return 0


def _indices(text: str) -> list[int]:
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError(f"--interdict expects comma-separated integers, got {text!r}") from None


def cmd_flow(args, out):
    g = read_graph(args.input)
    print(max_flow(build_network(g), _indices(args.interdict)), file=out)
    return 0


def cmd_oracle(args, out):
    g = read_graph(args.input)
    if args.oracle_cmd == "max-clique":
        doc = max_clique_exact(g).to_json()
    elif args.oracle_cmd == "interdiction":
        doc = exact_min_interdicted_flow(build_network(g), args.budget, args.limit).to_json()
    else:
        w = wood_equivalence(g, args.k, args.limit)
        doc = {"k": args.k, "budget": w.budget, "clique_exists": w.clique_exists,
               "optimal_flow": w.optimal_flow, "claim_holds": w.claim_holds}
    print(_dump(doc), file=out)
    return 0


def _finish_report(report, args, out):
    text = emit_report(report, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    if args.expect_agreement and report.summary["disagreements"]:
        print(f"{report.summary['disagreements']} disagreement(s)", file=sys.stderr)
        return EXIT_EXPECTATION
    return 0


def cmd_verify(args, out):
    g = read_graph(args.input)
    ks = None if args.k is None else [args.k]
    return _finish_report(verify_all_k(g, _variant(args), ks), args, out)


def cmd_hunt(args, out):
    if args.mode == "exhaustive":
        mode = ExhaustiveMode(args.n, args.limit)
    else:
        mode = RandomMode(args.n, args.p, args.trials, args.seed)
    return _finish_report(hunt(mode, _variant(args)), args, out)


def cmd_audit(args, out):
    g = read_graph(args.input)
    if (args.k is None) == (args.budget is None):
        raise UsageError("audit needs exactly one of --k or --budget")
    if args.k is not None:
        trace = decide(g, args.k, _variant(args)).trace
    else:
        _, trace = greedy_run(instance_with_budget(g, args.budget), _variant(args))
    doc = audit_trace(g, trace).to_json()
    doc["trace"] = trace.to_json()
    print(_dump(doc), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="polyclique", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(p):
        p.add_argument("--input", required=True, help="DIMACS graph path, or - for stdin")
        return p

    def with_variant(p):
        p.add_argument("--variant", choices=[v.value for v in BudgetVariant], default="prose")
        return p

    def with_report(p):
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--output", help="write the report here instead of stdout")
        p.add_argument("--expect-agreement", action="store_true", help="exit 3 on any disagreement")
        return p

    p = with_variant(with_input(sub.add_parser("decide", help="greedy K-clique decision")))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trace", action="store_true", help="print each greedy step as a JSON line first")
    p.set_defaults(func=cmd_decide)

    p = with_variant(with_input(sub.add_parser("maximize", help="greedy maximum clique size")))
    p.set_defaults(func=cmd_maximize)

    p = with_input(sub.add_parser("reduce", help="dump the layered network as JSON"))
    p.set_defaults(func=cmd_reduce)

    p = with_input(sub.add_parser("flow", help="max flow after interdicting source arcs"))
    p.add_argument("--interdict", default="", help="comma-separated 0-based edge indices")
    p.set_defaults(func=cmd_flow)

    p = sub.add_parser("oracle", help="exact oracles")
    osub = p.add_subparsers(dest="oracle_cmd", required=True, parser_class=_Parser)
    with_input(osub.add_parser("max-clique"))
    q = with_input(osub.add_parser("interdiction"))
    q.add_argument("--budget", type=int, required=True)
    q.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    q = with_input(osub.add_parser("wood"))
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.set_defaults(func=cmd_oracle)

    p = with_report(with_variant(with_input(sub.add_parser("verify", help="greedy vs oracle on one graph"))))
    p.add_argument("--k", type=int, help="single K (default: every K in 2..n)")
    p.set_defaults(func=cmd_verify)

    p = with_report(with_variant(sub.add_parser("hunt", help="search for disagreements")))
    p.add_argument("--mode", choices=["exhaustive", "random"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.set_defaults(func=cmd_hunt)

    p = with_variant(with_input(sub.add_parser("audit", help="measure a greedy trace on the real network")))
    p.add_argument("--k", type=int)
    p.add_argument("--budget", type=int, help="run the greedy with this budget instead of |E|-C(K,2)")
    p.set_defaults(func=cmd_audit)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"polyclique: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (UsageError, PolyCliqueError, ValueError) as exc:
        print(f"polyclique: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
