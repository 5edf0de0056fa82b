"""Command-line entry points: search, gen, bench.

Exit codes follow the grep convention for `search` (0 at least one match,
1 no match, 2 error); `gen` and `bench` use 0/2.  Positions print 0-based
by default; --base 1 shifts them for comparison against 1-based diagrams.
"""

from __future__ import annotations

import argparse
import sys

from .bench import ALGORITHMS, BenchConfig, run_benchmark, write_csv
from .core import MatchingError
from .formats import parse_pattern_string, parse_text_file, serialize_pattern, serialize_text
from .matchers import search_horspool, search_horspool_instrumented, search_naive, search_naive_instrumented
from .synth import GenConfig, generate_instance

EXIT_MATCH = 0
EXIT_NO_MATCH = 1
EXIT_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mvmatch",
        description="Exact pattern matching over multi-view (aligned multi-track) texts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", help="find all pattern occurrences in a text file")
    p.add_argument("--text", required=True, help="multi-track text file")
    p.add_argument("--pattern", required=True, help="whitespace-separated pattern tokens")
    p.add_argument("--algorithm", choices=["horspool", "naive"], default="horspool")
    p.add_argument("--base", type=int, choices=[0, 1], default=0,
                   help="display base for printed positions")
    p.add_argument("--count", action="store_true", help="print only the match count")
    p.add_argument("--stats", action="store_true",
                   help="print work counters to stderr")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("gen", help="generate a random instance to files")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--mode", choices=["uniform", "planted"], default="uniform")
    p.add_argument("--out-text", required=True)
    p.add_argument("--out-pattern", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="compare naive vs horspool over generated batches")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--n", type=int, default=100000)
    p.add_argument("--sigma", type=int, default=10)
    p.add_argument("--m-min", type=int, default=2)
    p.add_argument("--m-max", type=int, default=30)
    p.add_argument("--m-list", type=int, nargs="+", default=None,
                   help="explicit pattern lengths (overrides --m-min/--m-max)")
    p.add_argument("--instances", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--algorithms", nargs="+", choices=list(ALGORITHMS),
                   default=list(ALGORITHMS))
    p.add_argument("--mode", choices=["uniform", "planted"], default="uniform")
    p.add_argument("--csv", required=True, help="output CSV path")
    p.add_argument("--counts-only", action="store_true",
                   help="skip wall-time measurement; output is fully deterministic")
    p.set_defaults(func=cmd_bench)
    return parser


def cmd_search(args) -> int:
    try:
        with open(args.text, "rb") as fh:
            registry, text = parse_text_file(fh.read())
        pattern = parse_pattern_string(args.pattern, registry)
    except (OSError, MatchingError) as exc:
        print(f"mvmatch: {exc}", file=sys.stderr)
        return EXIT_ERROR

    if args.stats:
        run = search_horspool_instrumented if args.algorithm == "horspool" \
            else search_naive_instrumented
        matches, stats = run(text, pattern)
        print(
            f"alignments={stats.alignments} symbol_reads={stats.symbol_reads}"
            f" matches={stats.matches_found}",
            file=sys.stderr,
        )
    else:
        run = search_horspool if args.algorithm == "horspool" else search_naive
        matches = run(text, pattern)

    if args.count:
        print(len(matches))
    else:
        for pos in matches:
            print(pos + args.base)
    return EXIT_MATCH if matches else EXIT_NO_MATCH


def cmd_gen(args) -> int:
    config = GenConfig(k=args.k, n=args.n, sigma=args.sigma, m=args.m,
                       seed=args.seed, pattern_mode=args.mode)
    try:
        text, pattern = generate_instance(config)
        with open(args.out_text, "wb") as fh:
            fh.write(serialize_text(text))
        with open(args.out_pattern, "wb") as fh:
            fh.write(serialize_pattern(pattern))
    except (OSError, MatchingError) as exc:
        print(f"mvmatch: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return 0


def cmd_bench(args) -> int:
    m_values = tuple(args.m_list) if args.m_list else tuple(range(args.m_min, args.m_max + 1))
    measure = ("counts",) if args.counts_only else ("wall_time", "counts")
    config = BenchConfig(
        k=args.k,
        n=args.n,
        sigma=args.sigma,
        m_values=m_values,
        instances_per_m=args.instances,
        seed=args.seed,
        algorithms=tuple(args.algorithms),
        measure=measure,
        pattern_mode=args.mode,
    )
    try:
        rows = run_benchmark(config)
        write_csv(rows, args.csv)
    except (OSError, MatchingError) as exc:
        print(f"mvmatch: {exc}", file=sys.stderr)
        return EXIT_ERROR

    by_m: dict[int, dict[str, object]] = {}
    for row in rows:
        by_m.setdefault(row.m, {})[row.algorithm] = row
    for m in sorted(by_m):
        group = by_m[m]
        if "naive" in group and "horspool" in group:
            nv, hs = group["naive"], group["horspool"]
            time_ratio = nv.total_time / hs.total_time if hs.total_time else float("nan")
            read_ratio = (
                nv.total_symbol_reads / hs.total_symbol_reads
                if hs.total_symbol_reads
                else float("nan")
            )
            line = f"m={m}: read ratio naive/horspool = {read_ratio:.3f}"
            if not args.counts_only:
                line += f", time ratio = {time_ratio:.3f}"
            print(line)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
