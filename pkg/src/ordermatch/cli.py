"""Command-line front end.

Matches go to standard output, everything else to standard error.  Exit
status is 0 when something matched (or a dump/selftest succeeded), 1 when
nothing matched and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Sequence

from .counters import OpCounters
from .multi import build_automaton, search_multi
from .oracle import naive_multi, naive_search
from .representations import natural_rep
from .selftest import run_selftest
from .sequence_io import ParseError, format_dump, parse_patterns, parse_sequence
from .single import MatchReport, SinglePatternIndex, search_nn, search_prefix

EXIT_MATCH, EXIT_NO_MATCH, EXIT_ERROR = 0, 1, 2

SINGLE_ALGORITHMS = ("kmp-prefix", "kmp-nn", "naive")
MULTI_ALGORITHMS = ("ac", "naive")


class UsageError(Exception):
    pass


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None


def _check_distinct(name: str, values: Sequence[Any]) -> None:
    if len(set(values)) != len(values):
        raise UsageError(f"{name} contains duplicate values (--strict-distinct)")


def _load_pattern(args: argparse.Namespace) -> list[Any]:
    if args.pattern_values is not None:
        pattern = parse_sequence(args.pattern_values.replace(",", " "), "plain", args.exact)
    elif args.pattern is not None:
        pattern = parse_sequence(_read(args.pattern), args.format, args.exact)
    else:
        raise UsageError("a pattern is required (--pattern or --pattern-values)")
    if not pattern:
        raise UsageError("pattern is empty")
    if args.strict_distinct:
        _check_distinct("pattern", pattern)
    return pattern


def _load_texts(args: argparse.Namespace) -> list[tuple[str, list[Any]]]:
    sources = args.text or ["-"]
    if sources.count("-") + (getattr(args, "pattern", None) == "-") > 1:
        raise UsageError("standard input can feed only one of --pattern/--text")
    texts = []
    for source in sources:
        text = parse_sequence(_read(source), args.format, args.exact)
        if args.strict_distinct:
            _check_distinct(f"text {source}", text)
        texts.append((source, text))
    return texts


def _dump_rows(pattern: Sequence[Any], window_k: int | None) -> list[str]:
    idx = SinglePatternIndex.build(pattern, window_k)
    rows: dict[str, Sequence[Any]] = {
        "prefix": idx.mu,
        "natural": natural_rep(pattern),
        "prev": idx.nu.prev,
        "next": idx.nu.next,
        "failure": idx.pi,
    }
    return format_dump(rows)


def _search_one(args: argparse.Namespace, text: Sequence[Any],
                pattern: Sequence[Any], idx: SinglePatternIndex | None,
                counters: OpCounters) -> list[MatchReport]:
    if args.algorithm == "naive":
        return naive_search(text, pattern, args.last_k)
    assert idx is not None
    if args.algorithm == "kmp-prefix":
        return search_prefix(text, idx, counters)
    found = search_nn(text, idx, counters)
    if args.stats and counters.comparisons > 4 * len(text):
        raise RuntimeError(
            f"comparison budget exceeded: {counters.comparisons} > 4*{len(text)}")
    return found


def _run_texts(args: argparse.Namespace, texts: list[tuple[str, list[Any]]], scan) -> int:
    def job(item: tuple[str, list[Any]]) -> tuple[list[MatchReport], OpCounters]:
        counters = OpCounters()
        return scan(item[1], counters), counters

    if args.jobs > 1 and len(texts) > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(job, texts))
    else:
        results = [job(item) for item in texts]
    matched = False
    for (source, _), (found, counters) in zip(texts, results):
        prefix = f"{source}\t" if len(texts) > 1 else ""
        for match in found:
            matched = True
            if args.command == "msearch":
                print(f"{prefix}{match.pattern_id + 1}\t{match.start}\t{match.end}")
            else:
                print(f"{prefix}{match.start}\t{match.end}")
        if args.stats:
            if len(texts) > 1:
                print(f"file={source}", file=sys.stderr)
            for line in counters.lines():
                print(line, file=sys.stderr)
    return EXIT_MATCH if matched else EXIT_NO_MATCH


def _cmd_search(args: argparse.Namespace) -> int:
    if args.algorithm not in SINGLE_ALGORITHMS:
        raise UsageError(f"--algorithm {args.algorithm} is not a single-pattern algorithm")
    pattern = _load_pattern(args)
    texts = _load_texts(args)
    idx = None if args.algorithm == "naive" else SinglePatternIndex.build(pattern, args.last_k)
    if args.dump:
        for line in _dump_rows(pattern, args.last_k):
            print(line, file=sys.stderr)
    return _run_texts(args, texts,
                      lambda text, counters: _search_one(args, text, pattern, idx, counters))


def _cmd_msearch(args: argparse.Namespace) -> int:
    if args.algorithm not in MULTI_ALGORITHMS:
        raise UsageError(f"--algorithm {args.algorithm} is not a multi-pattern algorithm")
    if args.last_k is not None:
        raise UsageError("--last-k is only available for single-pattern search")
    patterns = parse_patterns(_read(args.patterns), args.exact)
    if not patterns:
        raise UsageError(f"no patterns in {args.patterns}")
    if args.strict_distinct:
        for pid, pattern in enumerate(patterns, start=1):
            _check_distinct(f"pattern {pid}", pattern)
    texts = _load_texts(args)
    if args.dump:
        for pid, pattern in enumerate(patterns, start=1):
            print(f"# pattern {pid}", file=sys.stderr)
            for line in _dump_rows(pattern, None):
                print(line, file=sys.stderr)
    if args.algorithm == "naive":
        return _run_texts(args, texts,
                          lambda text, counters: naive_multi(text, patterns, args.report_all))
    build_counters = OpCounters()
    automaton = build_automaton(patterns, build_counters)
    if args.stats:
        print(f"automaton_states={len(automaton.states)}", file=sys.stderr)
        for line in build_counters.lines():
            print(f"build_{line}", file=sys.stderr)
    return _run_texts(
        args, texts,
        lambda text, counters: search_multi(text, automaton, args.report_all, counters))


def _cmd_dump(args: argparse.Namespace) -> int:
    pattern = _load_pattern(args)
    for line in _dump_rows(pattern, args.last_k):
        print(line)
    return EXIT_MATCH


def _cmd_selftest(args: argparse.Namespace) -> int:
    results = run_selftest()
    for name, ok in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
    return EXIT_MATCH if all(ok for _, ok in results) else EXIT_NO_MATCH


def _positive(value: str) -> int:
    try:
        k = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value!r}") from None
    if k < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value!r}")
    return k


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordermatch",
        description="Find windows of a numeric text whose relative order matches a pattern.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", default="plain",
                        help="input format: plain (whitespace separated) or csv:<column>")
    common.add_argument("--exact", action="store_true",
                        help="parse numbers as exact decimals instead of floats")
    common.add_argument("--strict-distinct", action="store_true",
                        help="reject inputs containing duplicate values")

    def add_pattern_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--pattern", metavar="FILE", help="pattern file, or - for stdin")
        p.add_argument("--pattern-values", metavar="LIST",
                       help="inline pattern, e.g. '33,42,73,57'")
        p.add_argument("--last-k", type=_positive, metavar="K",
                       help="only compare each value with its K predecessors")

    def add_search_args(p: argparse.ArgumentParser, default_algorithm: str) -> None:
        p.add_argument("--text", action="append", metavar="FILE",
                       help="text file, or - for stdin (repeatable; default stdin)")
        p.add_argument("--algorithm", default=default_algorithm,
                       choices=sorted(set(SINGLE_ALGORITHMS + MULTI_ALGORITHMS)))
        p.add_argument("--stats", action="store_true",
                       help="print operation counters to stderr")
        p.add_argument("--dump", action="store_true",
                       help="print pattern representations to stderr")
        p.add_argument("--jobs", type=_positive, default=1,
                       help="worker threads when several --text files are given")

    p = sub.add_parser("search", parents=[common], help="single-pattern search")
    add_pattern_args(p)
    add_search_args(p, "kmp-nn")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("msearch", parents=[common], help="multiple-pattern search")
    p.add_argument("--patterns", required=True, metavar="FILE",
                   help="one pattern per line, values separated by whitespace")
    p.add_argument("--report-all", action="store_true",
                   help="report every pattern ending at a position, not just the longest")
    p.add_argument("--last-k", type=_positive, help=argparse.SUPPRESS)
    add_search_args(p, "ac")
    p.set_defaults(func=_cmd_msearch)

    p = sub.add_parser("dump", parents=[common], help="print pattern representations")
    add_pattern_args(p)
    p.set_defaults(func=_cmd_dump)

    p = sub.add_parser("selftest", help="run the embedded worked examples")
    p.set_defaults(func=_cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_MATCH
    try:
        return args.func(args)
    except (UsageError, ParseError, ValueError) as exc:
        print(f"ordermatch: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except RuntimeError as exc:
        print(f"ordermatch: internal error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
