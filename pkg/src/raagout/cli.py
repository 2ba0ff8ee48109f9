"""Command-line surface: validate, analyze, verify, reduce, batch.

Exit codes: 0 success / all checks pass, 1 semantic failure (non-admissible
graph, failed verification), 2 parse error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .autos import apply, parse_automorphism
from .families import family_graph
from .graph import (
    GraphError,
    NotAdmissibleError,
    ParseError,
    SimplicialGraph,
    SizeLimitError,
    parse_graph,
    require_admissible,
)
from .report import build_report, canonical_json, render_text
from .verify import SUITES, run_suite
from .words import format_word, normal_form, parse_word

EXIT_OK = 0
EXIT_SEMANTIC = 1
EXIT_PARSE = 2
EXIT_IO = 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load_graph(args) -> tuple[SimplicialGraph, list[str], str]:
    """Resolve the graph source: a file path or a --family literal."""
    if getattr(args, "family", None):
        if getattr(args, "path", None):
            raise CliError("give either a graph file or --family, not both", EXIT_PARSE)
        try:
            return family_graph(args.family), [], args.family
        except GraphError as exc:
            raise CliError(str(exc), EXIT_PARSE)
    if not getattr(args, "path", None):
        raise CliError("no graph given: pass a file path or --family", EXIT_PARSE)
    path = Path(args.path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_IO)
    try:
        g, warnings = parse_graph(text)
    except ParseError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE)
    return g, warnings, path.stem


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(canonical_json(report))
    else:
        sys.stdout.write(render_text(report))


def cmd_validate(args) -> int:
    g, warnings, _ = _load_graph(args)
    report = build_report(g, warnings)
    _emit(report, args.format)
    return EXIT_OK if report["validation"]["admissible"] else EXIT_SEMANTIC


def cmd_analyze(args) -> int:
    g, warnings, _ = _load_graph(args)
    try:
        require_admissible(g)
    except NotAdmissibleError as exc:
        _emit(build_report(g, warnings), args.format)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    report = build_report(
        g,
        warnings,
        include_structure=True,
        include_generators=True,
        include_bounds=True,
        skip_symmetries=args.skip_symmetries,
    )
    _emit(report, args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    g, warnings, _ = _load_graph(args)
    try:
        require_admissible(g)
    except NotAdmissibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    try:
        checks = run_suite(
            g, args.suite, max_len=args.max_len, seed=args.seed, pairs=args.pairs
        )
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    report = build_report(g, warnings, verifications=checks)
    _emit(report, args.format)
    failed = [c for c in checks if not c.passed]
    for check in failed:
        print(f"counterexample: {check.name}: {check.detail}", file=sys.stderr)
    return EXIT_OK if not failed else EXIT_SEMANTIC


def cmd_reduce(args) -> int:
    g, _, _ = _load_graph(args)
    try:
        w = parse_word(g, args.word)
        if args.apply:
            phi = parse_automorphism(g, args.apply)
            w = apply(phi, w)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    trace: list[str] | None = [] if args.show_steps else None
    nf = normal_form(w, trace=trace)
    if trace is not None:
        for step in trace:
            print(f"# {step}")
    print(format_word(nf))
    return EXIT_OK


def _batch_inputs(target: Path) -> list[Path]:
    if target.is_dir():
        return sorted(
            p
            for p in target.iterdir()
            if p.is_file()
            and not p.name.endswith(".report.json")
            and p.suffix in (".txt", ".graph", ".json", ".edges")
        )
    lines = target.read_text(encoding="utf-8").splitlines()
    base = target.parent
    out = []
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if line:
            p = Path(line)
            out.append(p if p.is_absolute() else base / p)
    return out


def cmd_batch(args) -> int:
    target = Path(args.target)
    if not target.exists():
        print(f"error: {target} does not exist", file=sys.stderr)
        return EXIT_IO
    try:
        inputs = _batch_inputs(target)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    rows = []
    for path in inputs:
        row = {"name": path.stem, "V": "-", "E": "-", "lower": "-", "upper": "-",
               "exact": "-", "status": "ok"}
        try:
            text = path.read_text(encoding="utf-8")
            g, warnings = parse_graph(text)
            row["V"], row["E"] = len(g.vertices), len(g.edges)
            require_admissible(g)
            report = build_report(
                g, warnings,
                include_structure=True, include_generators=True, include_bounds=True,
                skip_symmetries=args.skip_symmetries,
            )
            out_path = path.with_name(path.name + ".report.json")
            tmp_path = out_path.with_name(out_path.name + ".tmp")
            tmp_path.write_text(canonical_json(report), encoding="utf-8")
            os.replace(tmp_path, out_path)
            b = report["bounds"]
            row["lower"] = b["vcd_lower"]
            row["upper"] = b["vcd_upper_better"]
            row["exact"] = "yes" if b["vcd_exact"] is not None else "no"
        except OSError as exc:
            row["status"] = f"io-error: {exc}"
        except ParseError as exc:
            row["status"] = f"parse-error: {exc}"
        except NotAdmissibleError:
            row["status"] = "rejected"
        rows.append(row)
    header = f"{'graph':<24} {'|V|':>4} {'|E|':>4} {'lower':>6} {'upper':>6} {'exact':>6}  status"
    print(header)
    print("-" * len(header))
    for row in rows:
        print(
            f"{row['name']:<24} {row['V']:>4} {row['E']:>4} {row['lower']:>6} "
            f"{row['upper']:>6} {row['exact']:>6}  {row['status']}"
        )
    return EXIT_OK


def _add_graph_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("path", nargs="?", help="graph file (text or JSON form)")
    parser.add_argument(
        "--family",
        help="built-in family literal: path:n, cycle:n, nmtree:n,m, spider:k, "
        "join:n,m, overlap:n,m",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="raagout",
        description="Structure of the outer automorphism group of the "
        "right-angled Artin group of a connected triangle-free graph.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the admissibility hypotheses")
    _add_graph_source(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="full structure, generator, and bounds report")
    _add_graph_source(p)
    p.add_argument("--skip-symmetries", action="store_true",
                   help="bypass symmetry enumeration")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    _add_graph_source(p)
    p.add_argument("--max-len", type=int, default=6,
                   help="maximum word length for the words suite")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the randomized word sample")
    p.add_argument("--pairs", type=int, default=200,
                   help="number of word pairs for the words suite")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="print the canonical normal form of a word")
    _add_graph_source(p)
    p.add_argument("word", help="word literal, e.g. 'a b a^-1'")
    p.add_argument("--show-steps", action="store_true", help="trace the rewrites")
    p.add_argument("--apply", help="apply an automorphism literal first, "
                   "e.g. 'tv(a<-a*b); inv(c)'")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("batch", help="analyze a directory or manifest of graphs")
    p.add_argument("target", help="directory of graph files, or a manifest listing paths")
    p.add_argument("--skip-symmetries", action="store_true")
    p.set_defaults(func=cmd_batch)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
