"""Command-line surface.

Vertex labels are 1-based at the CLI boundary (words and human-facing text)
and 0-based in graph JSON files; words are digit strings like ``14213243``
or comma-separated like ``1,4,2,1,3,2,4,3``.

Exit codes: 0 success/pass, 1 verification violation, 2 usage or parse
error, 3 inconclusive (a search budget was exceeded).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .boards import parse_board, enumerate_triangulations
from .catalog import ClosurePolicy, closure_report, forbidden_set, minimal_graphs
from .dot import embedded_to_dot, graph_to_dot
from .errors import BudgetExceededError
from .graphs import Graph, chromatic_number, is_k_colourable
from .orientations import edge_budget_from_env, semi_transitive_certificate
from .verify import sweep, verify_domino_flip, verify_theorem, write_report
from .words import format_word, graph_of_word, parse_word, represents

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


def _load_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as f:
        return Graph.from_json_obj(json.load(f))


def _policy(value: str) -> ClosurePolicy:
    return ClosurePolicy(value)


def _budget(args) -> Optional[int]:
    if args.budget_edges is not None:
        return args.budget_edges
    return edge_budget_from_env()


def cmd_check_word(args) -> int:
    word = parse_word(args.word)
    n = max(word) + 1
    derived = graph_of_word(word, n)
    if args.emit_graph:
        if args.format == "dot":
            sys.stdout.write(graph_to_dot(derived))
        else:
            print(json.dumps(derived.to_json_obj(), sort_keys=True))
        return EXIT_OK
    g = _load_graph(args.graph)
    verdict = represents(word, g)
    if args.format == "json":
        print(json.dumps({"word": format_word(word), "represents": verdict}))
    else:
        print(f"represents: {'true' if verdict else 'false'}")
    return EXIT_OK


def cmd_decide(args) -> int:
    g = _load_graph(args.graph)
    try:
        certificate = semi_transitive_certificate(g, _budget(args))
    except BudgetExceededError as exc:
        print("inconclusive")
        print(f"budget: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    print("yes" if certificate is not None else "no")
    if args.emit_certificate and certificate is not None:
        print(json.dumps(certificate.to_json_obj(), sort_keys=True))
    return EXIT_OK


def cmd_colour(args) -> int:
    g = _load_graph(args.graph)
    if args.colours is not None:
        colouring = is_k_colourable(g, args.colours)
        obj = {
            "k": args.colours,
            "colourable": colouring is not None,
            "colouring": list(colouring.colours) if colouring else None,
        }
    else:
        k = chromatic_number(g)
        colouring = is_k_colourable(g, k)
        obj = {
            "chromatic_number": k,
            "colouring": list(colouring.colours) if colouring else None,
        }
    print(json.dumps(obj, sort_keys=True))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    board = parse_board(args.board, exploratory=args.exploratory)
    for t in enumerate_triangulations(board):
        print(t.literal())
    return EXIT_OK


def cmd_catalog(args) -> int:
    policy = _policy(args.policy)
    members = forbidden_set(policy).members
    if args.emit == "dot":
        for m in members:
            sys.stdout.write(embedded_to_dot(m.embedded, m.name.replace("@", "_")))
        return EXIT_OK
    obj = {
        "policy": policy.value,
        "patterns": [
            {
                "name": p.name,
                "vertices": p.embedded.graph.n,
                "has_domino": p.has_domino,
                "provenance": p.provenance,
            }
            for p in minimal_graphs()
        ],
        "members": [
            {
                "name": m.name,
                "base": m.base_name,
                "symmetry": m.symmetry.value,
                "coords": [list(rc) for rc in m.embedded.coords],
                "graph": m.embedded.graph.to_json_obj(),
            }
            for m in members
        ],
        "closure": closure_report(),
    }
    print(json.dumps(obj, sort_keys=True))
    return EXIT_OK


def cmd_verify(args) -> int:
    policy = _policy(args.policy)
    budget = _budget(args)
    modes = tuple(int(x) for x in args.domino_modes.split(","))
    if args.sweep:
        rows, cols = (int(x) for x in args.sweep.lower().split("x"))
        report, classifications = sweep(
            rows, cols, modes, policy, jobs=args.jobs, edge_budget=budget
        )
    else:
        board = parse_board(args.board)
        report, classifications = verify_theorem(
            board, policy, jobs=args.jobs, edge_budget=budget
        )
        if len(board.dominoes) == 1:
            flip = verify_domino_flip(board)
            report.violations.extend(flip.violations)
    write_report(sys.stdout, report, classifications)
    print(f"elapsed: {report.elapsed_seconds:.2f}s", file=sys.stderr)
    return report.exit_code()


def cmd_sweep(args) -> int:
    args.sweep = args.size
    args.board = None
    return cmd_verify(args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordrep",
        description=(
            "Decide word-representability of small graphs and verify the "
            "3-colourability equivalence over board triangulations."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, policy=True):
        p.add_argument("--format", choices=("json", "dot", "text"), default="json")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--budget-edges", type=int, default=None)
        if policy:
            p.add_argument(
                "--policy", choices=("literal", "extended"), default="extended"
            )

    p = sub.add_parser("check-word", help="map a word to its graph or test a file")
    p.add_argument("--word", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph")
    group.add_argument("--emit-graph", action="store_true")
    common(p, policy=False)
    p.set_defaults(func=cmd_check_word)

    p = sub.add_parser("decide", help="decide word-representability of a graph file")
    p.add_argument("--graph", required=True)
    p.add_argument("--emit-certificate", action="store_true")
    common(p, policy=False)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("colour", help="chromatic number or k-colourability")
    p.add_argument("--graph", required=True)
    p.add_argument("--colours", type=int, default=None)
    common(p, policy=False)
    p.set_defaults(func=cmd_colour)

    p = sub.add_parser("enumerate", help="list triangulation literals of a board")
    p.add_argument("--board", required=True)
    p.add_argument("--exploratory", action="store_true")
    common(p, policy=False)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("catalog", help="dump the forbidden catalog")
    p.add_argument("--emit", choices=("json", "dot"), default="json")
    common(p)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", help="verify one board or sweep boards")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--board")
    group.add_argument("--sweep", metavar="RxC")
    p.add_argument("--domino-modes", default="0,1")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="sweep all boards up to RxC")
    p.add_argument("size", metavar="RxC")
    p.add_argument("--domino-modes", default="0,1")
    common(p)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
