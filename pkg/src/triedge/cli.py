"""Command-line interface: ``triedge <subcommand> ...``.

Exit status is 0 on success, 1 on usage, format or range errors (with a
one-line diagnostic on stderr), and 2 when ``verify`` finds a row whose brute
force minimum differs from g(n, e).
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from typing import Sequence, TextIO

from . import compress as compress_mod
from . import family, formats, search, weighted
from .graph import classify
from .weighted import WeightedGraph

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # one line on stderr, exit 1
        raise UsageError(message)


def _jobs(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("--jobs must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="triedge", description="Triangular-edge minimisation toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("count", help="count edges and non-triangular edges")
    c.add_argument("file", help="graph file, or - for stdin")
    c.add_argument("--format", choices=formats.FORMATS)

    c = sub.add_parser("construct", help="build G(a, b, c)")
    c.add_argument("--a", type=int, required=True)
    c.add_argument("--b", type=int, required=True)
    c.add_argument("--c", type=int, required=True)
    c.add_argument("--out", choices=("g6", "el"), default="g6")

    c = sub.add_parser("formula", help="evaluate g(n, e) or t(n, e) over the family")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--e", type=int, required=True)
    c.add_argument("--kind", choices=("g", "t"), default="g")

    c = sub.add_parser("reduce", help="eliminate independent triples of a weighted graph")
    c.add_argument("file", help="weighted graph file, or - for stdin")
    c.add_argument("--trace", action="store_true")

    c = sub.add_parser("compress", help="compress a graph without losing e or t")
    c.add_argument("file", help="graph file, or - for stdin")
    c.add_argument("--format", choices=formats.FORMATS)
    c.add_argument("--out", choices=("g6", "el"))
    c.add_argument("--trace", action="store_true")

    c = sub.add_parser("verify", help="exhaustively compare minima with g(n, e)")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--e", type=int)
    c.add_argument("--jobs", type=_jobs, default=None)
    c.add_argument("--minimizers", action="store_true", help="list minimiser graph6 strings after each row")

    c = sub.add_parser("frontier", help="Pareto frontier of (e, t) over n-vertex graphs")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--jobs", type=_jobs, default=None)

    c = sub.add_parser("table", help="g and t over the family for every edge count")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--csv", metavar="PATH", help="write the table here instead of stdout")
    return p


def _read_graph(path: str, fmt: str | None, stdin: TextIO):
    text = formats.read_text(path, stdin)
    fmt = fmt or formats.detect_format(path, text)
    if fmt == "wg":
        return formats.from_weighted_text(text), fmt
    return formats.parse_graph(text, fmt), fmt


def _cmd_count(args, out: TextIO, stdin: TextIO) -> int:
    g, _ = _read_graph(args.file, args.format, stdin)
    if isinstance(g, WeightedGraph):
        p = weighted.weighted_profile(g)
        e, t = p.e, p.t
        out.write(f"e={formats.format_rational(e)} t={formats.format_rational(t)} "
                  f"triangular={formats.format_rational(e - t)}\n")
        return EXIT_OK
    cl = classify(g)
    out.write(f"e={cl.e} t={cl.t} triangular={cl.e - cl.t}\n")
    return EXIT_OK


def _cmd_construct(args, out: TextIO, stdin: TextIO) -> int:
    g = family.construct(family.Triple(args.a, args.b, args.c))
    out.write(formats.render_graph(g, args.out))
    return EXIT_OK


def _cmd_formula(args, out: TextIO, stdin: TextIO) -> int:
    fn = family.g_formula if args.kind == "g" else family.t_formula
    r = fn(args.n, args.e)
    argmin = " ".join(f"({t})" for t in r.argmins)
    out.write(f"{args.kind}({args.n},{args.e})={r.value} argmin={argmin}\n")
    return EXIT_OK


def _cmd_reduce(args, out: TextIO, stdin: TextIO) -> int:
    text = formats.read_text(args.file, stdin)
    wg = formats.from_weighted_text(text)
    result, trace = weighted.reduce_to_triple_free(wg)
    if args.trace:
        out.writelines(f"# {line}\n" for line in trace.lines())
    if trace.good is not None:
        try:
            out.write(f"# rounded={weighted.round_to_family(result)}\n")
        except ValueError as exc:
            out.write(f"# rounding skipped: {exc}\n")
    out.write(formats.to_weighted_text(result))
    return EXIT_OK


def _cmd_compress(args, out: TextIO, stdin: TextIO) -> int:
    g, fmt = _read_graph(args.file, args.format, stdin)
    if isinstance(g, WeightedGraph):
        raise formats.FormatError("compress expects an unweighted graph")
    result = compress_mod.compress_with_trace(g)
    if args.trace:
        out.writelines(f"# {line}\n" for line in result.trace_lines())
    out.write(formats.render_graph(result.graph, args.out or fmt))
    return EXIT_OK


def _cmd_verify(args, out: TextIO, stdin: TextIO) -> int:
    jobs = args.jobs or search.default_jobs()
    if args.e is None:
        reports = search.verify_range(args.n, jobs)
    else:
        reports = [search.brute_min_triangular(args.n, args.e, jobs)]
    out.write(search.REPORT_HEADER + "\n")
    for r in reports:
        out.write(r.csv_row() + "\n")
        if args.minimizers:
            more = " ..." if r.overflow else ""
            out.write(f"# minimizers {' '.join(r.minimizers)}{more}\n")
    return EXIT_OK if all(r.match for r in reports) else EXIT_MISMATCH


def _cmd_frontier(args, out: TextIO, stdin: TextIO) -> int:
    points = search.pareto_frontier(args.n, args.jobs or search.default_jobs())
    out.write("n,e,t,witness\n")
    for p in points:
        out.write(f"{args.n},{p.e},{p.t},{p.witness}\n")
    return EXIT_OK


def _table_rows(n: int) -> list[list[object]]:
    rows: list[list[object]] = [["n", "e", "g", "t", "g_argmins", "t_argmins"]]
    triples = lambda r: " ".join(f"({t})" for t in r.argmins)  # noqa: E731
    for e in range(n * (n - 1) // 2 + 1):
        t = family.t_formula(n, e)
        g = family.g_formula(n, e) if e > n * n // 4 else None
        rows.append([n, e, "" if g is None else g.value, t.value, "" if g is None else triples(g), triples(t)])
    return rows


def _cmd_table(args, out: TextIO, stdin: TextIO) -> int:
    if args.n < 0:
        raise ValueError("n must be non-negative")
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(_table_rows(args.n))
    if args.csv and args.csv != "-":
        with open(args.csv, "w") as fh:
            fh.write(buf.getvalue())
    else:
        out.write(buf.getvalue())
    return EXIT_OK


_COMMANDS = {
    "count": _cmd_count,
    "construct": _cmd_construct,
    "formula": _cmd_formula,
    "reduce": _cmd_reduce,
    "compress": _cmd_compress,
    "verify": _cmd_verify,
    "frontier": _cmd_frontier,
    "table": _cmd_table,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None,
        err: TextIO | None = None, stdin: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args, out, stdin)
    except UsageError as exc:
        err.write(f"triedge: usage error: {exc}\n")
    except (ValueError, OSError) as exc:
        err.write(f"triedge: error: {exc}\n")
    return EXIT_USAGE


def main() -> None:
    sys.exit(run())
