"""Command-line front end.

    symbreak analyze GRAPH6 [GRAPH6 ...] | --input FILE
    symbreak verify-corpus [--source FILE] [--nmin 2] [--nmax 5] [--trees-only | --cyclic-only]
    symbreak enumerate N
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from functools import partial
from multiprocessing import Pool
from itertools import islice
from typing import Iterable, Iterator, Optional, TextIO

from .analysis import FIELDS, AnalysisRecord, analyze_graph
from .enumeration import MAX_ENUM_N, enumerate_connected_graphs
from .errors import SymbreakError
from .graph import Graph, has_cycle, is_tree
from .graph6 import encode_graph6, parse_graph6, read_graph6_lines
from .group import DEFAULT_GROUP_BUDGET
from .labeling import DEFAULT_SEARCH_BUDGET
from .trees import MAX_TREE_N, enumerate_trees

# (source tag, graph or None, parse error or None)
Item = tuple[str, Optional[Graph], Optional[str]]


def _tsv_cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (list, dict)):
        return json.dumps(x, separators=(",", ":"), sort_keys=True)
    return str(x)


class Reporter:
    def __init__(self, out: TextIO, fmt: str, extra_columns: Iterable[str] = ()) -> None:
        self.out = out
        self.fmt = fmt
        self.columns = list(FIELDS) + list(extra_columns)
        if fmt == "tsv":
            out.write("\t".join(self.columns) + "\n")

    def record(self, row: dict) -> None:
        if self.fmt == "json":
            self.out.write(json.dumps(row, sort_keys=True) + "\n")
        else:
            self.out.write("\t".join(_tsv_cell(row.get(c)) for c in self.columns) + "\n")

    def summary(self, summary: dict) -> None:
        if self.fmt == "json":
            self.out.write(json.dumps({"summary": summary}, sort_keys=True) + "\n")
        else:
            for key in sorted(summary):
                self.out.write(f"# {key}\t{_tsv_cell(summary[key])}\n")


def _work(item: Item, **opts) -> dict:
    tag, g, err = item
    if g is None:
        return {"graph6": tag, "status": "error", "error": err}
    row = analyze_graph(g, **opts)
    return _row(row)


def _row(rec: AnalysisRecord) -> dict:
    d = rec.to_dict()
    d["_failed"] = rec.failed_verdicts()
    d["_cyclic"] = rec.cyclic
    return d


def _run(items: Iterator[Item], args: argparse.Namespace, out: TextIO) -> int:
    extra = ["vertex_witness", "edge_witness", "certificate", "tree_report"] if args.emit_certificates else []
    if args.orbit_survey:
        extra.append("orbit_survey")
    rep = Reporter(out, args.format, extra)
    opts = dict(group_budget=args.group_budget, search_budget=args.search_budget,
                emit_certificates=args.emit_certificates, orbit_survey=args.orbit_survey)
    work = partial(_work, **opts)
    counts: Counter = Counter()
    by_n: Counter = Counter()
    failures = []
    survey = Counter()

    def consume(rows: Iterable[dict]) -> None:
        for row in rows:
            failed = row.pop("_failed", [])
            cyclic = row.pop("_cyclic", None)
            rep.record(row)
            counts["records"] += 1
            counts[row.get("status", "error")] += 1
            if row.get("n") is not None and row.get("status") == "ok":
                by_n[str(row["n"])] += 1
            if row.get("status") == "error":
                failures.append({"graph6": row.get("graph6"), "reason": row.get("error")})
            for v in failed:
                failures.append({"graph6": row["graph6"], "reason": v})
            if cyclic and row.get("status") == "ok":
                counts["cyclic"] += 1
                if row.get("fallback_used"):
                    counts["fallback_used"] += 1
                if row.get("fallback_reason") == "step1_infeasible":
                    counts["step1_infeasible"] += 1
            if row.get("is_tree") and row.get("in_family_T"):
                counts["in_family_T"] += 1
            for t in row.get("orbit_survey") or []:
                if not t["minimal"]:
                    survey["nonminimal_orbits"] += 1
                    survey["nonminimal_orbits_distinguishing"] += t["distinguishing"]

    if args.jobs > 1:
        # submit in windows so a long corpus is never materialized
        with Pool(args.jobs) as pool:
            while True:
                window = list(islice(items, 64 * args.jobs))
                if not window:
                    break
                consume(pool.imap(work, window, chunksize=4))
    else:
        consume(map(work, items))

    summary = {
        "records": counts["records"],
        "ok": counts["ok"],
        "skipped": counts["skipped"],
        "errors": counts["error"],
        "by_n": dict(sorted(by_n.items(), key=lambda kv: int(kv[0]))),
        "cyclic": counts["cyclic"],
        "fallback_used": counts["fallback_used"],
        "step1_infeasible": counts["step1_infeasible"],
        "in_family_T": counts["in_family_T"],
        "violations": sum(1 for f in failures if f["reason"].startswith("verdict_")),
        "failures": failures,
    }
    if args.orbit_survey:
        summary.update(survey)
    rep.summary(summary)
    return 0 if not failures else 1


def _lines_to_items(stream: TextIO) -> Iterator[Item]:
    for lineno, text in read_graph6_lines(stream):
        try:
            yield text, parse_graph6(text), None
        except SymbreakError as exc:
            yield f"line {lineno}: {text}", None, f"line {lineno}: {type(exc).__name__}: {exc}"


def _filter_items(items: Iterable[Item], args: argparse.Namespace) -> Iterator[Item]:
    for tag, g, err in items:
        if g is not None:
            if args.trees_only and not is_tree(g):
                continue
            if args.cyclic_only and not has_cycle(g):
                continue
        yield tag, g, err


def _builtin_corpus(args: argparse.Namespace) -> Iterator[Graph]:
    for n in range(args.nmin, args.nmax + 1):
        if args.trees_only:
            yield from enumerate_trees(n)
        else:
            yield from enumerate_connected_graphs(n)


def cmd_analyze(args: argparse.Namespace, out: TextIO) -> int:
    if args.input:
        if args.input == "-":
            items = list(_lines_to_items(sys.stdin))
        else:
            with open(args.input, encoding="ascii") as fh:
                items = list(_lines_to_items(fh))
    else:
        items = []
        for i, text in enumerate(args.graphs, start=1):
            try:
                items.append((text, parse_graph6(text), None))
            except SymbreakError as exc:
                items.append((text, None, f"argument {i}: {type(exc).__name__}: {exc}"))
    return _run(iter(items), args, out)


def cmd_verify_corpus(args: argparse.Namespace, out: TextIO) -> int:
    if args.source:
        with open(args.source, encoding="ascii") as fh:
            return _run(_filter_items(_lines_to_items(fh), args), args, out)
    cap = MAX_TREE_N if args.trees_only else MAX_ENUM_N
    if not 1 <= args.nmin <= args.nmax <= cap:
        print(f"error: need 1 <= nmin <= nmax <= {cap}", file=sys.stderr)
        return 2
    items = ((encode_graph6(g), g, None) for g in _builtin_corpus(args))
    return _run(_filter_items(items, args), args, out)


def cmd_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    try:
        graphs = enumerate_trees(args.n) if args.trees_only else enumerate_connected_graphs(args.n)
        for g in graphs:
            out.write(encode_graph6(g) + "\n")
    except SymbreakError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("--trees-only", action="store_true")
    p.add_argument("--cyclic-only", action="store_true")
    p.add_argument("--group-budget", type=int, default=DEFAULT_GROUP_BUDGET)
    p.add_argument("--search-budget", type=int, default=DEFAULT_SEARCH_BUDGET)
    p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    p.add_argument("--emit-certificates", action="store_true",
                   help="include witnesses and full construction certificates")
    p.add_argument("--orbit-survey", action="store_true",
                   help="also try the construction on every non-minimal cycle orbit")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symbreak",
                                     description="Distinguishing numbers and indices of small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="analyze graph6 graphs")
    a.add_argument("graphs", nargs="*", help="graph6 strings")
    a.add_argument("--input", "-i", help="file of graph6 lines ('-' for stdin)")
    _common(a)
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify-corpus", help="check the bounds over a corpus")
    v.add_argument("--source", help="file of graph6 lines instead of the built-in enumerator")
    v.add_argument("--nmin", type=int, default=2)
    v.add_argument("--nmax", type=int, default=5)
    _common(v)
    v.set_defaults(func=cmd_verify_corpus)

    e = sub.add_parser("enumerate", help="print one graph6 line per connected graph on N vertices")
    e.add_argument("n", type=int)
    e.add_argument("--trees-only", action="store_true")
    e.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "trees_only", False) and getattr(args, "cyclic_only", False):
        print("error: --trees-only and --cyclic-only are exclusive", file=sys.stderr)
        return 2
    return args.func(args, out or sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
