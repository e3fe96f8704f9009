"""Command-line surface.

Graphs are read from a file or an inline string, in graph6 or edge-list
form (header line ``n <vertex_count>`` then ``u v`` lines). Inline graph6
uses the ``g6:`` prefix. Detection is by content and can be overridden
with --format. Exit codes: 0 success or any resolved verdict, 1 domain
failure (unresolved classification, verification failures), 2 usage or
format errors.
"""

from __future__ import annotations

import argparse
import sys

from .graph_core import (
    Graph,
    VertexLimitError,
    from_graph6,
    jump,
    parse_graph,
    strip_isolated,
    to_edge_list,
    to_graph6,
)
from .catalog import generate
from .classify import (
    UnresolvedError,
    classify,
    default_max_k,
    dissipation_number,
)
from .preimage import build_dissipation_tree, jump_preimages, tree_to_dot, tree_to_manifest
from .snipped import find_snipped, verify_snipped
from .verify import render_machine, render_text, run_all

USAGE_ERROR = 2
DOMAIN_ERROR = 1


def _read_graph(spec: str, fmt: str) -> Graph:
    if spec.startswith("g6:"):
        return from_graph6(spec[3:])
    if spec.startswith("edges:"):
        return parse_graph(spec[6:].replace(";", "\n"), "edges")
    try:
        with open(spec, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValueError(f"cannot read {spec!r}: {exc}") from exc
    return parse_graph(text, fmt)


def _emit_graph(g: Graph, fmt: str) -> str:
    return to_edge_list(g) if fmt == "edges" else to_graph6(g) + "\n"


def _add_input_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="infile", required=True,
                   help="graph file, g6:STRING, or edges:STRING (lines separated by ';')")
    p.add_argument("--format", choices=["auto", "g6", "edges"], default="auto",
                   help="input format (default: detect by content)")


def _cmd_jump(args) -> int:
    g = _read_graph(args.infile, args.format)
    sys.stdout.write(_emit_graph(jump(g), args.out_format))
    return 0


def _cmd_iterate(args) -> int:
    g = _read_graph(args.infile, args.format)
    cur = g
    for k in range(args.steps + 1):
        sys.stdout.write(f"{k}\t{cur.n}\t{cur.m}\t{to_graph6(cur)}\n")
        if k < args.steps:
            cur = jump(cur)
    return 0


def _cmd_classify(args) -> int:
    g = _read_graph(args.infile, args.format)
    try:
        c = classify(g, args.max_k)
    except UnresolvedError as exc:
        sys.stdout.write(f"UNRESOLVED max_k={exc.max_k} reason={exc.reason}\n")
        for k, n, m in exc.trace:
            sys.stdout.write(f"{k}\t{n}\t{m}\n")
        return DOMAIN_ERROR
    if c.verdict == "dissipates":
        sys.stdout.write(f"DISSIPATES d={c.d_value}\n")
    elif c.verdict == "converges":
        sys.stdout.write(f"CONVERGES target={c.fixed_point}\n")
    else:
        acc = c.accumulation
        sys.stdout.write(f"DIVERGES k={acc.k} target={acc.target}\n")
        if args.witness:
            pairs = " ".join(f"{i}->{x}" for i, x in enumerate(acc.witness.vertex_map))
            sys.stdout.write(f"witness {pairs}\n")
    for k, n, m in c.trace:
        sys.stdout.write(f"{k}\t{n}\t{m}\n")
    return 0


def _cmd_d_value(args) -> int:
    g = _read_graph(args.infile, args.format)
    d = dissipation_number(g, args.max_k)
    if d is not None:
        sys.stdout.write(f"{d}\n")
        return 0
    try:
        c = classify(g, args.max_k)
    except UnresolvedError:
        sys.stdout.write(f"UNRESOLVED max_k={args.max_k}\n")
        return DOMAIN_ERROR
    sys.stdout.write("INFINITE\n")
    return 0


def _cmd_snipped(args) -> int:
    h = _read_graph(args.h, args.format)
    g = _read_graph(args.g, args.format)
    h = strip_isolated(h)
    w = find_snipped(h, g)
    if w is None:
        sys.stdout.write("NOT-SNIPPED\n")
        return 0
    assert verify_snipped(w, h, g)
    h_edges = h.edges()
    g_edges = g.edges()
    for i, j in enumerate(w.edge_map):
        a, b = h_edges[i]
        u, v = g_edges[j]
        sys.stdout.write(f"edge ({a},{b}) -> ({u},{v})\n")
    for gv in sorted(w.labels):
        sys.stdout.write(f"label {gv} -> {w.labels[gv]}\n")
    return 0


def _cmd_preimage(args) -> int:
    g = _read_graph(args.infile, args.format)
    for h in jump_preimages(g, args.bound):
        sys.stdout.write(to_graph6(h) + "\n")
    return 0


def _cmd_tree(args) -> int:
    tree = build_dissipation_tree(args.max_edges, args.max_k)
    sys.stdout.write(tree_to_manifest(tree))
    if args.dot:
        with open(args.dot, "w", encoding="ascii") as fh:
            fh.write(tree_to_dot(tree))
    if args.figure:
        from .render import save_tree_figure

        save_tree_figure(tree, args.figure)
    return 0


def _cmd_verify(args) -> int:
    catalog = generate(args.n_max)
    report = run_all(catalog, args.max_k)
    if args.machine:
        sys.stdout.write(render_machine(report))
    else:
        sys.stdout.write(render_text(report))
    if args.figure:
        from .render import save_check_figure

        save_check_figure(
            [(c.check_id, c.tested, len(c.failures)) for c in report.checks], args.figure
        )
    return 0 if report.overall_pass else DOMAIN_ERROR


def _cmd_render(args) -> int:
    g = _read_graph(args.infile, args.format)
    graphs = [g]
    cur = g
    for _ in range(args.steps):
        cur = jump(cur)
        graphs.append(cur)
    if args.dot:
        from .render import graph_to_dot, trace_to_dot

        text = trace_to_dot(graphs) if args.steps else graph_to_dot(g)
        with open(args.dot, "w", encoding="ascii") as fh:
            fh.write(text)
    if args.out:
        from .render import save_graph_figure

        save_graph_figure(graphs, args.out)
    if not args.dot and not args.out:
        raise ValueError("render needs --dot and/or --out")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jumpgraph",
        description="Iterated jump-graph operators, classification, and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jump", help="print the jump graph of the input")
    _add_input_args(p)
    p.add_argument("--out-format", choices=["g6", "edges"], default="g6")
    p.set_defaults(fn=_cmd_jump)

    p = sub.add_parser("iterate", help="print k, n, m, graph6 for each iterate")
    _add_input_args(p)
    p.add_argument("--steps", type=int, required=True)
    p.set_defaults(fn=_cmd_iterate)

    p = sub.add_parser("classify", help="verdict plus iterate trace")
    _add_input_args(p)
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--witness", action="store_true", help="print the accumulation vertex map")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("d-value", help="dissipation number, or INFINITE")
    _add_input_args(p)
    p.add_argument("--max-k", type=int, default=None)
    p.set_defaults(fn=_cmd_d_value)

    p = sub.add_parser("snipped", help="snipped-subgraph witness or NOT-SNIPPED")
    p.add_argument("--h", required=True, help="pattern graph (file or inline)")
    p.add_argument("--g", required=True, help="host graph (file or inline)")
    p.add_argument("--format", choices=["auto", "g6", "edges"], default="auto")
    p.set_defaults(fn=_cmd_snipped)

    p = sub.add_parser("preimage", help="all jump preimages, in graph6")
    _add_input_args(p)
    p.add_argument("--bound", type=int, default=8, help="edge-count search bound")
    p.set_defaults(fn=_cmd_preimage)

    p = sub.add_parser("tree", help="dissipation tree manifest, optional DOT/figure")
    p.add_argument("--max-edges", type=int, default=6)
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--dot", help="write DOT here")
    p.add_argument("--figure", help="write a rendered figure here (png/pdf)")
    p.set_defaults(fn=_cmd_tree)

    p = sub.add_parser("verify", help="run the whole check suite over a generated catalog")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--machine", action="store_true", help="tab-separated output")
    p.add_argument("--figure", help="write a per-check bar chart here")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("render", help="DOT and/or figure for a graph or iterate trace")
    _add_input_args(p)
    p.add_argument("--steps", type=int, default=0, help="also render this many jumps")
    p.add_argument("--dot", help="write DOT here")
    p.add_argument("--out", help="write a figure here (png/pdf)")
    p.set_defaults(fn=_cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    if getattr(args, "max_k", None) is None and hasattr(args, "max_k"):
        args.max_k = default_max_k()
    try:
        return args.fn(args)
    except (ValueError, VertexLimitError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        sys.stderr.write("hint: see --help for input formats and bounds\n")
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
