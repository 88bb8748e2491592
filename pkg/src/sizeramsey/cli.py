"""Command-line front end.

Subcommands::

    family SPEC                       print the graph6 of a named graph
    arrow --red R --blue B [GRAPH]    decide G -> (R, B) for each input graph
    check-color --coloring FILE       validate a non-arrowing certificate
    enumerate --edges Q               graph6 stream of all graphs with Q edges
    ramsey --red R --blue B           determine the size Ramsey number
    verify-paper --level LEVEL        run the built-in verification suite

Patterns: ``P<m>``, ``C<n>``, ``K<n>``, ``K<m>,<n>``, ``F<n>``, ``<n>K2``,
``<n>P<m>``, ``S<k>`` (star with k leaves) and ``g6:<graph6>``.

Graphs: ``--graph`` takes ``family:<spec>`` (``family:H3``, ``family:K1+2C4``,
``family:K1+2C4+P3``, ``family:2F2``, ``family:C6`` ...), ``g6:<graph6>`` or a
bare graph6 string; ``--graph-file`` reads graph6 lines from a file; with
neither, graph6 lines are read from stdin.

Exit codes: 0 verified / true, 1 refuted / false (a certificate is
printed), 2 usage or input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections.abc import Iterator
from typing import TextIO

from . import __version__
from .arrowing import DEFAULT_EDGE_BUDGET, EdgeColoring, arrows, check_coloring
from .bounds import size_ramsey, verify_lower
from .enumerate import DEFAULT_EDGE_LIMIT, EnumerationTask, count_with_edges, default_workers, graphs_with_edges
from .errors import BudgetExceeded, RefutedLowerBound, SizeRamseyError
from .families import build, parse_family
from .graph import Graph
from .graph6 import graph6_str, parse_graph6, read_graph6_lines
from .patterns import parse_pattern
from .suite import LEVELS, report_json, run_suite

SCHEMA = "sizeramsey.cli/1"

EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_graph_arg(text: str) -> Graph:
    """``family:<spec>``, ``g6:<graph6>`` or a bare graph6 string."""
    text = text.strip()
    if text.startswith("family:"):
        return build(parse_family(text[len("family:"):]))
    if text.startswith("g6:"):
        text = text[3:]
    return parse_graph6(text)


def _graphs(args, stdin: TextIO) -> Iterator[Graph]:
    if args.graph is not None:
        yield parse_graph_arg(args.graph)
    elif args.graph_file is not None:
        with open(args.graph_file, "rb") as fh:
            yield from read_graph6_lines(fh)
    else:
        yield from read_graph6_lines(stdin)


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        import tomllib
    except ModuleNotFoundError:  # Python < 3.11
        import tomli as tomllib
    with open(path, "rb") as fh:
        data = tomllib.load(fh)
    allowed = {"budget_edges", "avoider_budget", "threads"}
    unknown = set(data) - allowed
    if unknown:
        raise UsageError(f"unknown config keys: {sorted(unknown)}")
    return data


def _emit(out: TextIO, args, payload: dict, text: str) -> None:
    if args.json:
        out.write(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


# -- subcommands ----------------------------------------------------------------------------

def cmd_family(args, out: TextIO, stdin: TextIO) -> int:
    text = args.spec[len("family:"):] if args.spec.startswith("family:") else args.spec
    spec = parse_family(text)
    g = build(spec)
    _emit(out, args, {"command": "family", "family": str(spec), "graph6": graph6_str(g),
                      "vertices": g.n, "edges": [list(e) for e in g.edges()]}, graph6_str(g))
    return EXIT_OK


def cmd_arrow(args, out: TextIO, stdin: TextIO) -> int:
    red, blue = parse_pattern(args.red), parse_pattern(args.blue)
    budget = args.budget_edges if args.budget_edges is not None else args.config.get("avoider_budget",
                                                                                     DEFAULT_EDGE_BUDGET)
    code = EXIT_OK
    certificates = []
    for g in _graphs(args, stdin):
        v = arrows(g, red, blue, budget)
        payload = {"command": "arrow", "graph": graph6_str(g), "red": str(red), "blue": str(blue),
                   "verdict": "Arrows" if v.arrows else "NotArrows", "avoiders_examined": v.examined}
        if v.arrows:
            _emit(out, args, payload, f"Arrows {graph6_str(g)}")
            continue
        code = EXIT_REFUTED
        cert = v.certificate.to_dict(red, blue)
        certificates.append(cert)
        payload["certificate"] = cert
        _emit(out, args, payload, f"NotArrows {graph6_str(g)}\n{json.dumps(cert, sort_keys=True)}")
    if args.certificates_out:
        with open(args.certificates_out, "w") as fh:
            json.dump({"schema": SCHEMA, "certificates": certificates}, fh, indent=1, sort_keys=True)
            fh.write("\n")
    return code


def cmd_check_color(args, out: TextIO, stdin: TextIO) -> int:
    if args.coloring == "-":
        data = json.load(stdin)
    else:
        with open(args.coloring) as fh:
            data = json.load(fh)
    coloring, rp, bp = EdgeColoring.from_dict(data)
    red = parse_pattern(args.red) if args.red else rp
    blue = parse_pattern(args.blue) if args.blue else bp
    if red is None or blue is None:
        raise UsageError("patterns must be given on the command line or in the colouring file")
    ok = check_coloring(coloring, red, blue)
    _emit(out, args, {"command": "check-color", "graph": graph6_str(coloring.host), "red": str(red),
                      "blue": str(blue), "valid": ok},
          f"{'valid' if ok else 'invalid'} certificate for {graph6_str(coloring.host)} vs ({red}, {blue})")
    return EXIT_OK if ok else EXIT_REFUTED


def cmd_enumerate(args, out: TextIO, stdin: TextIO) -> int:
    budget = args.budget_edges if args.budget_edges is not None else args.config.get("budget_edges",
                                                                                     DEFAULT_EDGE_LIMIT)
    task = EnumerationTask(args.edges, min_max_degree=args.min_max_degree, connected=args.connected,
                           budget=budget)
    if args.count:
        n = count_with_edges(args.edges, args.min_max_degree, args.connected, args.threads, budget)
        _emit(out, args, {"command": "enumerate", "edges": args.edges, "count": n}, str(n))
        return EXIT_OK
    for g in graphs_with_edges(task, args.threads):
        out.write(graph6_str(g) + "\n")
    return EXIT_OK


def cmd_ramsey(args, out: TextIO, stdin: TextIO) -> int:
    red, blue = parse_pattern(args.red), parse_pattern(args.blue)
    budget = args.budget_edges if args.budget_edges is not None else args.config.get("budget_edges", 12)
    report = size_ramsey(red, blue, budget, workers=args.threads)
    d = report.to_dict()
    if args.certificates_out and report.lower > 1:
        try:
            rec = verify_lower(red, blue, report.lower - 1, workers=args.threads, validate=True,
                               budget=max(budget, report.lower - 1))
            bundle = rec.to_dict(with_certificates=True)
        except RefutedLowerBound as err:  # pragma: no cover - would contradict the sweep above
            bundle = {"refuted_by": err.graph}
        with open(args.certificates_out, "w") as fh:
            json.dump({"schema": SCHEMA, "lower_bound": bundle}, fh, indent=1, sort_keys=True)
            fh.write("\n")
    if report.status == "exact":
        text = f"r({red}, {blue}) = {report.value}  witness {report.witness} ({report.witness_source})"
    else:
        upper = report.upper if report.upper is not None else "?"
        text = f"{report.lower} <= r({red}, {blue}) <= {upper}  (edge budget {budget} exceeded)"
    _emit(out, args, {"command": "ramsey", "report": d}, text)
    return EXIT_OK if report.status == "exact" else EXIT_BUDGET


def cmd_verify(args, out: TextIO, stdin: TextIO) -> int:
    def progress(check: dict) -> None:
        if not args.quiet:
            mark = "PASS" if check["passed"] else "FAIL"
            print(f"{mark} criterion {check['criterion']}: {check['id']}", file=sys.stderr, flush=True)

    report = run_suite(args.level, args.threads, progress)
    text = report_json(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK if report["passed"] else EXIT_REFUTED


# -- argument parsing -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes (default: available CPUs)")
    common.add_argument("--deterministic", action="store_true",
                        help="ordered merging of parallel results (always on; accepted for scripts)")
    common.add_argument("--config", default=None, help="TOML file with budget_edges/avoider_budget/threads")

    p = argparse.ArgumentParser(prog="sizeramsey", description="Size Ramsey numbers by exhaustive search.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("family", parents=[common], help="print a named graph as graph6")
    f.add_argument("spec", help="family spec, e.g. H3, K1+2C4, 2F2, C7")
    f.set_defaults(func=cmd_family)

    def graph_source(sp: argparse.ArgumentParser) -> None:
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--graph", help="family:<spec>, g6:<graph6> or a graph6 string")
        g.add_argument("--graph-file", help="file of graph6 lines")

    a = sub.add_parser("arrow", parents=[common], help="decide G -> (red, blue)")
    graph_source(a)
    a.add_argument("--red", required=True)
    a.add_argument("--blue", required=True)
    a.add_argument("--budget-edges", type=int, default=None,
                   help=f"edge limit for generic red avoiders (default {DEFAULT_EDGE_BUDGET})")
    a.add_argument("--certificates-out", default=None, help="write certificates for NotArrows graphs")
    a.set_defaults(func=cmd_arrow)

    c = sub.add_parser("check-color", parents=[common], help="validate a colouring certificate")
    c.add_argument("--coloring", required=True, help="colouring JSON file, or - for stdin")
    c.add_argument("--red", default=None)
    c.add_argument("--blue", default=None)
    c.set_defaults(func=cmd_check_color)

    e = sub.add_parser("enumerate", parents=[common], help="all graphs with a given number of edges")
    e.add_argument("--edges", "-q", type=int, required=True)
    e.add_argument("--min-max-degree", type=int, default=0)
    e.add_argument("--connected", action="store_true")
    e.add_argument("--count", action="store_true", help="print only the number of graphs")
    e.add_argument("--budget-edges", type=int, default=None,
                   help=f"largest edge count allowed (default {DEFAULT_EDGE_LIMIT})")
    e.set_defaults(func=cmd_enumerate)

    r = sub.add_parser("ramsey", parents=[common], help="determine the size Ramsey number")
    r.add_argument("--red", required=True)
    r.add_argument("--blue", required=True)
    r.add_argument("--budget-edges", type=int, default=None, help="largest edge count to search (default 12)")
    r.add_argument("--certificates-out", default=None,
                   help="write the lower-bound certificates (one colouring per graph)")
    r.set_defaults(func=cmd_ramsey)

    v = sub.add_parser("verify-paper", parents=[common], help="run the built-in verification suite")
    v.add_argument("--level", choices=LEVELS, default="quick")
    v.add_argument("--out", default=None, help="write the JSON report here instead of stdout")
    v.add_argument("--quiet", action="store_true", help="no progress lines on stderr")
    v.set_defaults(func=cmd_verify)
    return p


def run(argv: list[str] | None = None, out: TextIO | None = None, stdin: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    stdin = sys.stdin if stdin is None else stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        args.config = _load_config(args.config)
        if args.threads is None:
            args.threads = args.config.get("threads", default_workers())
        if args.threads < 1:
            raise UsageError("--threads must be at least 1")
        return args.func(args, out, stdin)
    except BudgetExceeded as exc:
        return _fail(args, out, exc, EXIT_BUDGET)
    except (SizeRamseyError, UsageError, OSError, ValueError, KeyError) as exc:
        return _fail(args, out, exc, EXIT_USAGE)


def _fail(args, out: TextIO, exc: Exception, code: int) -> int:
    print(f"sizeramsey: error: {exc}", file=sys.stderr)
    if getattr(args, "json", False):
        out.write(json.dumps({"schema": SCHEMA, "error": {"type": type(exc).__name__, "message": str(exc)},
                              "exit": code}, sort_keys=True) + "\n")
    return code


def main() -> None:
    try:
        code = run()
        sys.stdout.flush()
    except BrokenPipeError:  # downstream closed early, e.g. `| head`
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = EXIT_OK
    sys.exit(code)


if __name__ == "__main__":
    main()
