"""Command-line front end.

Exit codes are a stable contract for CI: 0 success/verified, 1 a
counterexample or witness was found (including a losing play certificate),
2 usage or parse errors, 3 the time budget ran out.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import budget
from .budget import TimeBudgetExceeded
from .eternal import ALL_GUARDS, MODELS, ONE_GUARD, extract_strategy, losing_certificate, safe_family
from .graphs import (
    Graph,
    GraphFormatError,
    bits,
    blown_up_c6,
    complete,
    complete_bipartite,
    cycle,
    enumerate_nonisomorphic,
    enumerate_trees,
    kmn_minus_matching,
    parse_edge_list,
    parse_graph6,
    path,
    star,
    stems_with_leaves_tree,
    to_graph6,
    vertex_tuple,
)
from .harness import CHECKS, SEARCHES, check, collect_params, parameter_sweep, render_sweep_table, search_report
from .trees import r2_reduces_to_small_star, reduce_tree, tree_clique_cover

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3

_FAMILIES = {
    "path": (1, path),
    "cycle": (1, cycle),
    "complete": (1, complete),
    "star": (1, star),
    "kmn": (2, complete_bipartite),
    "kmn-m": (3, kmn_minus_matching),
    "blowc6": (6, lambda *s: blown_up_c6(s)),
    "stems": (1, stems_with_leaves_tree),
}


def parse_family(spec: str) -> Graph:
    """name:args micro-grammar, e.g. cycle:6, kmn-m:3,3,3, blowc6:2,1,1,2,1,1."""
    name, sep, rest = spec.partition(":")
    if name not in _FAMILIES:
        raise GraphFormatError(f"unknown family {name!r}; known: {', '.join(sorted(_FAMILIES))}")
    arity, builder = _FAMILIES[name]
    if not sep:
        raise GraphFormatError(f"family {name} needs {arity} integer argument(s)")
    try:
        args = [int(x) for x in rest.split(",")]
    except ValueError:
        raise GraphFormatError(f"non-integer argument in family spec {spec!r}") from None
    if len(args) != arity:
        raise GraphFormatError(f"family {name} takes {arity} argument(s), got {len(args)}")
    try:
        return builder(*args)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def _load_graph(args) -> Graph:
    if args.family:
        return parse_family(args.family)
    if args.g6:
        with open(args.g6) as fh:
            for line in fh:
                if line.strip():
                    return parse_graph6(line)
        raise GraphFormatError(f"no graph6 line in {args.g6}")
    with open(args.edgelist) as fh:
        return parse_edge_list(fh.read())


def _add_input_group(sub, required=True):
    grp = sub.add_mutually_exclusive_group(required=required)
    grp.add_argument("--family", help="named family spec, e.g. cycle:6 or kmn-m:3,3,3")
    grp.add_argument("--g6", help="file with a graph6 line")
    grp.add_argument("--edgelist", help='edge-list file ("n m" header then "u v" lines)')
    return grp


def _fmt_set(mask: int) -> str:
    return "{" + ",".join(str(v) for v in vertex_tuple(mask)) + "}"


def cmd_params(args) -> int:
    g = _load_graph(args)
    report = collect_params(g, with_witnesses=args.witnesses)
    if args.format == "json":
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(f"graph {report.graph6}  n={report.n} m={report.m}")
        for key in ("gamma", "m_eternal", "alpha", "eternal", "theta", "theta_c", "gamma_c", "tau", "nu"):
            val = report.values.get(key)
            note = f"  ({report.notes[key]})" if key in report.notes else ""
            print(f"  {key:>10} = {val if val is not None else '-'}{note}")
        if args.witnesses:
            for key, wit in report.witnesses.items():
                print(f"  {key:>10} witness: {wit}")
    return EXIT_OK


def cmd_check(args) -> int:
    if args.theorem_id not in CHECKS:
        print(f"unknown theorem id {args.theorem_id!r}", file=sys.stderr)
        print("registered ids:", file=sys.stderr)
        for tid, spec in sorted(CHECKS.items()):
            print(f"  {tid:<18} {spec.description}", file=sys.stderr)
        return EXIT_USAGE
    report = check(args.theorem_id, n_max=args.n_max)
    if args.format == "json":
        print(report.to_json())
    else:
        print("\n".join(report.render_lines()))
    return EXIT_OK if report.status == "verified" else EXIT_FINDING


def cmd_search(args) -> int:
    if args.question_id not in SEARCHES:
        print(f"unknown question id {args.question_id!r}", file=sys.stderr)
        print("registered ids:", file=sys.stderr)
        for qid, spec in sorted(SEARCHES.items()):
            print(f"  {qid:<16} {spec.description}", file=sys.stderr)
        return EXIT_USAGE
    report = search_report(args.question_id, n_max=args.n_max)
    if args.format == "json":
        print(report.to_json())
    else:
        print("\n".join(report.render_lines()))
    return EXIT_OK if report.status == "exploratory-none-found" else EXIT_FINDING


def _sweep_universe(args):
    if args.all_graphs is not None:
        out = []
        for n in range(1, args.all_graphs + 1):
            out.extend(enumerate_nonisomorphic(n))
        return out
    if args.all_trees is not None:
        out = []
        for n in range(1, args.all_trees + 1):
            out.extend(enumerate_trees(n))
        return out
    graphs = []
    with open(args.g6) as fh:
        for line in fh:
            if line.strip():
                graphs.append(parse_graph6(line))
    return graphs


def cmd_sweep(args) -> int:
    universe = _sweep_universe(args)
    if args.jobs and args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(collect_params, universe, chunksize=8))
        rows.sort(key=lambda r: (r.n, r.graph6))
    else:
        rows = parameter_sweep(universe, with_witnesses=args.witnesses)
    if args.format == "json":
        print(json.dumps({"rows": [r.to_json_dict() for r in rows]}, indent=2))
    else:
        print(render_sweep_table(rows))
    return EXIT_OK


def cmd_tree(args) -> int:
    g = _load_graph(args)
    try:
        value, trace = reduce_tree(g)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    theta = tree_clique_cover(g)
    reducible, r2_trace = r2_reduces_to_small_star(g) if g.n >= 2 else (False, None)
    if args.format == "json":
        print(json.dumps({
            "m_eternal": value,
            "theta": theta,
            "r2_to_small_star": reducible,
            "r2_trace": r2_trace.to_json_dict() if r2_trace else None,
            "trace": trace.to_json_dict(),
        }, indent=2))
    else:
        for line in trace.render_lines():
            print(line)
        print(f"m_eternal = {value}, theta = {theta}")
        if reducible:
            print(f"R2-reduces to K2 or K1,2: yes (-> {r2_trace.terminal})")
        else:
            print("R2-reduces to K2 or K1,2: no")
    return EXIT_OK


def cmd_play(args) -> int:
    g = _load_graph(args)
    k = args.k
    model = args.model
    fam = safe_family(g, k, model)
    if not fam.members:
        cert = losing_certificate(g, k, model)
        print(f"{k} guards cannot defend this graph in the {model} model.")
        print(f"  {cert['reason']}")
        if cert["start"] is not None:
            print(f"  from {_fmt_set(cert['start'])} the attack run {cert['attacks']} wins for the attacker")
        return EXIT_FINDING
    strategy = extract_strategy(fam)
    config = fam.sorted_members()[0]
    print(f"defending with {k} guards ({model}); guards start at {_fmt_set(config)}")
    print("enter an unoccupied vertex to attack (EOF quits)")
    while True:
        try:
            line = input("attack> ")
        except EOFError:
            print("session closed")
            return EXIT_OK
        line = line.strip()
        if not line:
            continue
        try:
            r = int(line)
        except ValueError:
            print(f"  not a vertex index: {line!r}")
            continue
        if not 0 <= r < g.n:
            print(f"  vertex {r} out of range 0..{g.n - 1}")
            continue
        if config >> r & 1:
            print(f"  vertex {r} is occupied; attacks hit unoccupied vertices")
            continue
        config = strategy.respond(config, r)
        print(f"  guards move to {_fmt_set(config)}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="domguard",
                                 description="exact graph protection solvers and theorem checks")
    ap.add_argument("--time-budget", type=float, default=None, metavar="SECONDS",
                    help="cooperative limit; exceeding it exits with code 3")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="compute all parameters of one graph")
    _add_input_group(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--witnesses", action="store_true", help="include witness sets and families")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("check", help="verify a registered statement over enumerated graphs")
    p.add_argument("theorem_id")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="exhaustive counterexample/witness search")
    p.add_argument("question_id")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("sweep", help="parameter table over a universe of graphs")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--all-graphs", type=int, metavar="N", help="all graphs up to N vertices")
    grp.add_argument("--all-trees", type=int, metavar="N", help="all trees up to N vertices")
    grp.add_argument("--g6", help="file with one graph6 line per graph")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--witnesses", action="store_true")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers for the sweep")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("tree", help="reduce a tree and report the protection number")
    _add_input_group(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("play", help="defend interactively against typed attacks")
    _add_input_group(p)
    p.add_argument("--k", type=int, required=True, help="number of guards")
    p.add_argument("--model", choices=MODELS, default=ALL_GUARDS)
    p.set_defaults(func=cmd_play)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    budget.set_time_budget(args.time_budget)
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TimeBudgetExceeded as exc:
        print(f"time budget exhausted during {exc}; partial progress discarded", file=sys.stderr)
        return EXIT_LIMIT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        budget.set_time_budget(None)


if __name__ == "__main__":
    sys.exit(main())
