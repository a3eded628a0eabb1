"""Command-line front end.

Graphs are read one per line (graph6) or one per ``n <count>`` block (edge
list) from the given files or standard input.  Results go to standard output,
timing and diagnostics to standard error.

Exit codes: 0 success, 1 predicate false or counterexample found, 2 usage or
input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import NamedTuple, Optional, Sequence

from . import harness
from .domgraph import build_dominating_graph, geodesic, summary
from .domination import (
    classify,
    domination_number,
    inverse_domination_number,
    is_dominating,
)
from .errors import BudgetExceeded, GraphError
from .graph import Graph, corona_k1, format_set, leaf_completion, parse_set
from .graph_io import (
    parse_edgelist,
    parse_graph6,
    split_edgelist_blocks,
    write_dot,
    write_edgelist,
    write_graph6,
)
from .metric import hypercube_labeling, is_partial_cube, median_witness

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class Outcome(NamedTuple):
    text: str
    code: int = EXIT_OK
    dot: Optional[str] = None


def read_graphs(text: str, fmt: str) -> list[Graph]:
    if fmt == "edgelist":
        return [parse_edgelist(block) for block in split_edgelist_blocks(text)]
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def format_graph(g: Graph, fmt: str) -> str:
    return write_edgelist(g).rstrip("\n") if fmt == "edgelist" else write_graph6(g)


# -- per-graph handlers --------------------------------------------------------

def _classify(g: Graph, args) -> Outcome:
    return Outcome(classify(g, budget=args.budget).summary(witness=args.witness))


def _domgraph(g: Graph, args) -> Outcome:
    k = None if args.k == "full" else int(args.k)
    h = build_dominating_graph(g, k, budget=args.budget)
    dot = write_dot(h) if args.dot else None
    return Outcome(summary(h, stats=args.stats), dot=dot)


def _median(g: Graph, args) -> Outcome:
    w = median_witness(g)
    if w is None:
        return Outcome("median=true")
    return Outcome(f"median=false witness={w[0]},{w[1]},{w[2]}", EXIT_FALSE)


def _partial_cube(g: Graph, args) -> Outcome:
    if not is_partial_cube(g):
        return Outcome("partial_cube=false", EXIT_FALSE)
    text = "partial_cube=true"
    if args.labels:
        text += " labels=" + " ".join(format_set(s) for s in hypercube_labeling(g))
    return Outcome(text)


def _gamma(g: Graph, args) -> Outcome:
    return Outcome(f"gamma={domination_number(g, budget=args.budget)}")


def _inv_gamma(g: Graph, args) -> Outcome:
    return Outcome(f"inv_gamma={inverse_domination_number(g, budget=args.budget)}")


def _extend(g: Graph, args) -> Outcome:
    h = corona_k1(g) if args.mode == "corona" else leaf_completion(g)
    return Outcome(format_graph(h, args.format))


def _geodesic(g: Graph, args) -> Outcome:
    src, dst = parse_set(getattr(args, "from")), parse_set(args.to)
    for s in (src, dst):
        if s >> g.n or not is_dominating(g, s):
            raise GraphError(f"{format_set(s)} is not a dominating set of the input graph")
    h = build_dominating_graph(g, budget=args.budget)
    path = geodesic(h, h.index_of(src), h.index_of(dst))
    text = f"length={len(path) - 1} path=" + "->".join(format_set(h.labels[i]) for i in path)
    return Outcome(text)


HANDLERS = {
    "classify": _classify,
    "domgraph": _domgraph,
    "median": _median,
    "partial-cube": _partial_cube,
    "gamma": _gamma,
    "inv-gamma": _inv_gamma,
    "extend": _extend,
    "geodesic": _geodesic,
}


def _run_one(item) -> Outcome | tuple[str, int]:
    g, args = item
    try:
        return HANDLERS[args.command](g, args)
    except BudgetExceeded as exc:
        return (str(exc), EXIT_BUDGET)
    except GraphError as exc:
        return (str(exc), EXIT_USAGE)


def _read_inputs(args) -> str:
    if not args.inputs:
        return sys.stdin.read()
    chunks = []
    for path in args.inputs:
        with open(path, encoding="ascii") as fh:
            chunks.append(fh.read())
    return "\n".join(chunks)


def _stream(args, out, err) -> int:
    graphs = read_graphs(_read_inputs(args), args.format)
    items = [(g, args) for g in graphs]
    if args.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_one, items, chunksize=16))
    else:
        results = map(_run_one, items)
    status = EXIT_OK
    dots = []
    for res in results:
        if not isinstance(res, Outcome):
            message, code = res
            print(f"error: {message}", file=err)
            return code
        print(res.text, file=out)
        if res.dot is not None:
            dots.append(res.dot)
        status = max(status, res.code)
    if getattr(args, "dot", None):
        with open(args.dot, "w", encoding="ascii") as fh:
            fh.write("".join(dots))
    print(f"processed {len(graphs)} graph(s)", file=err)
    return status


def _verify(args, out, err) -> int:
    name = args.check
    kwargs: dict = {"jobs": args.jobs}
    if name == "thm3.6":
        kwargs.update(seed=args.seed, samples=500 if args.samples is None else args.samples)
    if name == "cor3.5":
        kwargs = {"seed": args.seed}
        if args.samples is not None:
            kwargs["trials"] = args.samples
        if args.max_n is not None:
            kwargs["max_host_n"] = args.max_n
    elif args.max_n is not None:
        kwargs["max_n"] = args.max_n
    if name == "thm3.1" and args.exclude_c4_components:
        kwargs["exclude_c4_components"] = True
    report = harness.VERIFIERS[name](**kwargs)
    out.write(report.to_text())
    print(report.human(), file=err)
    return EXIT_OK if report.ok else EXIT_FALSE


def _preimage(args, out, err) -> int:
    with open(args.target, encoding="ascii") as fh:
        targets = read_graphs(fh.read(), args.format)
    if len(targets) != 1:
        raise GraphError(f"--target must hold exactly one graph, found {len(targets)}")
    found = harness.search_dominating_graph_preimage(targets[0], args.max_host_n)
    if found is None:
        print("preimage=none", file=out)
        return EXIT_FALSE
    print(f"preimage={write_graph6(found)}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=None, help="subset budget for enumeration")
    common.add_argument("--jobs", type=int, default=1)

    parser = argparse.ArgumentParser(
        prog="dommedian",
        description="Dominating graphs, median graphs and partial cubes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, help_text, inputs=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if inputs:
            p.add_argument("inputs", nargs="*", help="input files (default: stdin)")
        return p

    cmd("classify", "DM / MDScoMDS / leaf condition").add_argument("--witness", action="store_true")
    p = cmd("domgraph", "build the k-dominating graph")
    p.add_argument("--k", default="full", help="size cap N or 'full'")
    p.add_argument("--dot", metavar="PATH")
    p.add_argument("--stats", action="store_true")
    cmd("median", "brute-force median graph test")
    cmd("partial-cube", "partial cube test").add_argument("--labels", action="store_true")
    cmd("gamma", "domination number")
    cmd("inv-gamma", "inverse domination number")
    cmd("extend", "embed in a DM graph").add_argument(
        "--mode", choices=("corona", "completion"), default="completion")
    p = cmd("geodesic", "shortest path in D(G) between two dominating sets")
    p.add_argument("--from", required=True, metavar="SET")
    p.add_argument("--to", required=True, metavar="SET")
    p = cmd("verify", "re-run an exhaustive verification sweep", inputs=False)
    p.add_argument("check", choices=sorted(harness.VERIFIERS))
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--exclude-c4-components", action="store_true")
    p = cmd("preimage", "search hosts whose dominating graph matches a target", inputs=False)
    p.add_argument("--target", required=True, metavar="FILE")
    p.add_argument("--max-host-n", type=int, default=5)
    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return _verify(args, out, err)
        if args.command == "preimage":
            return _preimage(args, out, err)
        if args.command == "domgraph" and args.k != "full" and not args.k.isdigit():
            raise GraphError(f"--k must be a non-negative integer or 'full', got {args.k!r}")
        return _stream(args, out, err)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=err)
        return EXIT_BUDGET
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
