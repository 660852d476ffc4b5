"""``hgmorph`` command line.

Exit status: 0 on success, 1 when a law check finds a counterexample, 2 on
usage or parse errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .dot import export_dot
from .formats import FormatError, parse_hypergraph, parse_subset, serialize_hypergraph, serialize_subset
from .grid import EDGE_MODELS, gen_grid
from .hypergraph import EdgeSet, SubHypergraph, VertexSet, induced_by_edges, induced_by_vertices
from .laws import LAWS, UnknownLaw, check_laws
from .oracle import EnumerationTooLarge
from .pipeline import PipelineError, parse_pipeline, run_pipeline

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _load_graph(path: str):
    try:
        return parse_hypergraph(_read(path))
    except FormatError as exc:
        raise _UsageError(f"{path}: {exc}") from None


def cmd_run(args: argparse.Namespace) -> int:
    hg = _load_graph(args.graph)
    try:
        x = parse_subset(_read(args.input), hg)
    except FormatError as exc:
        raise _UsageError(f"{args.input}: {exc}") from None
    try:
        pipeline = parse_pipeline(args.pipeline)
        result, trace = run_pipeline(pipeline, x)
    except PipelineError as exc:
        raise _UsageError(f"pipeline: {exc}") from None
    _write(args.out, serialize_subset(result))
    if args.trace:
        sys.stderr.write("\n".join(trace) + "\n")
    return EXIT_OK


def cmd_check_laws(args: argparse.Namespace) -> int:
    hg = _load_graph(args.graph)
    names = None if args.laws is None else [n.strip() for n in args.laws.split(",") if n.strip()]
    instance = args.instance or Path(args.graph).stem
    try:
        reports = check_laws(hg, names, instance=instance, jobs=args.jobs)
    except (UnknownLaw, EnumerationTooLarge) as exc:
        raise _UsageError(str(exc.args[0])) from None
    for report in reports:
        sys.stdout.write(str(report) + "\n")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_COUNTEREXAMPLE


def cmd_gen_grid(args: argparse.Namespace) -> int:
    try:
        hg = gen_grid(args.width, args.height, args.edge_model)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    _write(args.out, serialize_hypergraph(hg))
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace) -> int:
    hg = _load_graph(args.graph)
    highlight = None
    if args.highlight:
        try:
            x = parse_subset(_read(args.highlight), hg)
        except FormatError as exc:
            raise _UsageError(f"{args.highlight}: {exc}") from None
        if isinstance(x, VertexSet):
            highlight = induced_by_vertices(x)
        elif isinstance(x, EdgeSet):
            highlight = induced_by_edges(x)
        else:
            highlight = x
    _write(args.out, export_dot(hg, highlight))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hgmorph", description="Mathematical morphology on hypergraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="apply an operator pipeline to a subset")
    run.add_argument("--graph", required=True)
    run.add_argument("--input", required=True, help="subset document (vset / eset / both)")
    run.add_argument("--pipeline", required=True, help="e.g. 'edelta; veps' or 'hg-asf:3'")
    run.add_argument("--out", help="output file (default: stdout)")
    run.add_argument("--trace", action="store_true", help="print per-step cardinalities to stderr")
    run.set_defaults(func=cmd_run)

    laws = sub.add_parser("check-laws", help="exhaustively verify algebraic laws on a small hypergraph")
    laws.add_argument("--graph", required=True)
    laws.add_argument("--laws", help=f"comma-separated subset of: {', '.join(sorted(LAWS))}")
    laws.add_argument("--instance", help="instance id used in the report (default: file stem)")
    laws.add_argument("--jobs", type=int, default=1, help="worker processes")
    laws.set_defaults(func=cmd_check_laws)

    gen = sub.add_parser("gen", help="generate hypergraphs")
    gen_sub = gen.add_subparsers(dest="generator", required=True)
    grid = gen_sub.add_parser("grid", help="grid hypergraph")
    grid.add_argument("--width", type=int, required=True)
    grid.add_argument("--height", type=int, required=True)
    grid.add_argument("--edge-model", default="cross4", choices=EDGE_MODELS)
    grid.add_argument("--out")
    grid.set_defaults(func=cmd_gen_grid)

    dot = sub.add_parser("export-dot", help="render as a Graphviz incidence graph")
    dot.add_argument("--graph", required=True)
    dot.add_argument("--highlight", help="subset document to colour")
    dot.add_argument("--out")
    dot.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"hgmorph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
