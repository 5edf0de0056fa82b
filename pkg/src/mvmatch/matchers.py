"""Search algorithms: multi-view Horspool, the naive baseline, a classic
single-view Horspool reference, and instrumented variants.

All searchers return every overlapping occurrence as a sorted list of
0-based window positions.  The instrumented variants additionally count
alignments tried and text-symbol reads, which serve as machine-independent
work measures for benchmarking.

Counting convention: at each Horspool alignment the k reads used for the
shift (one per view, all at the window's last position) count as k reads;
the read of the last pattern symbol's view is shared with the last-character
comparison and is not double-counted.  Verification reads of the remaining
offsets count one each, stopping at the first mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import MultiViewText, Pattern, check_same_registry
from .shift_table import ShiftTable, build_shift_table


@dataclass
class SearchStats:
    """Work counters for one search invocation."""

    alignments: int = 0
    symbol_reads: int = 0
    matches_found: int = 0


def _pattern_rows(text: MultiViewText, pattern: Pattern):
    """Per-offset (view sequence, expected symbol) pairs."""
    view_of = text.registry.symbol_to_view
    views = text.views
    return [(views[view_of[s]], s) for s in pattern.symbols]


def search_naive(text: MultiViewText, pattern: Pattern) -> list[int]:
    """Try every window, comparing offsets left to right until mismatch."""
    check_same_registry(text, pattern)
    n, m = text.n, pattern.m
    matches: list[int] = []
    if m > n:
        return matches
    rows = _pattern_rows(text, pattern)
    for i in range(n - m + 1):
        for q, (row, sym) in enumerate(rows):
            if row[i + q] != sym:
                break
        else:
            matches.append(i)
    return matches


def search_naive_instrumented(
    text: MultiViewText, pattern: Pattern
) -> tuple[list[int], SearchStats]:
    check_same_registry(text, pattern)
    n, m = text.n, pattern.m
    matches: list[int] = []
    stats = SearchStats()
    if m > n:
        return matches, stats
    rows = _pattern_rows(text, pattern)
    reads = 0
    for i in range(n - m + 1):
        stats.alignments += 1
        for q, (row, sym) in enumerate(rows):
            reads += 1
            if row[i + q] != sym:
                break
        else:
            matches.append(i)
    stats.symbol_reads = reads
    stats.matches_found = len(matches)
    return matches, stats


def search_horspool(
    text: MultiViewText, pattern: Pattern, table: ShiftTable | None = None
) -> list[int]:
    """Multi-view Horspool: compare the last position first, verify left to
    right on a hit, then shift by the minimum bad-character offset over all
    views' symbols at the window's last position.

    A prebuilt shift table may be passed to reuse pre-processing across
    texts (the benchmark uses this to exclude pre-processing from timings).
    """
    check_same_registry(text, pattern)
    n, m = text.n, pattern.m
    matches: list[int] = []
    if m > n:
        return matches
    if table is None:
        table = build_shift_table(pattern)
    shift_of = table.shifts.get
    default = table.default_shift
    rows = _pattern_rows(text, pattern)
    last_row, last_sym = rows[-1]
    prefix = rows[:-1]
    views = text.views
    limit = n - m
    j = 0
    while j <= limit:
        e = j + m - 1
        if last_row[e] == last_sym:
            for q, (row, sym) in enumerate(prefix):
                if row[j + q] != sym:
                    break
            else:
                matches.append(j)
        j += min(shift_of(row[e], default) for row in views)
    return matches


def search_horspool_instrumented(
    text: MultiViewText, pattern: Pattern
) -> tuple[list[int], SearchStats]:
    check_same_registry(text, pattern)
    n, m = text.n, pattern.m
    matches: list[int] = []
    stats = SearchStats()
    if m > n:
        return matches, stats
    table = build_shift_table(pattern)
    shift_of = table.shifts.get
    default = table.default_shift
    rows = _pattern_rows(text, pattern)
    last_row, last_sym = rows[-1]
    prefix = rows[:-1]
    views = text.views
    k = len(views)
    limit = n - m
    reads = 0
    j = 0
    while j <= limit:
        stats.alignments += 1
        reads += k  # the k shift reads; the last-symbol view's read is shared
        e = j + m - 1
        if last_row[e] == last_sym:
            for q, (row, sym) in enumerate(prefix):
                reads += 1
                if row[j + q] != sym:
                    break
            else:
                matches.append(j)
        j += min(shift_of(row[e], default) for row in views)
    stats.symbol_reads = reads
    stats.matches_found = len(matches)
    return matches, stats


def horspool_alignment_trace(text: MultiViewText, pattern: Pattern) -> list[int]:
    """The exact sequence of window positions the Horspool loop visits."""
    check_same_registry(text, pattern)
    n, m = text.n, pattern.m
    trace: list[int] = []
    if m > n:
        return trace
    table = build_shift_table(pattern)
    shift_of = table.shifts.get
    default = table.default_shift
    views = text.views
    limit = n - m
    j = 0
    while j <= limit:
        trace.append(j)
        e = j + m - 1
        j += min(shift_of(row[e], default) for row in views)
    return trace


def classic_horspool(text: Sequence, pattern: Sequence) -> list[int]:
    """Textbook single-view Horspool on plain sequences.

    Independent of the multi-view machinery; used as the reference for the
    k=1 degeneracy checks.
    """
    matches, _ = _classic_horspool(text, pattern)
    return matches


def classic_horspool_trace(text: Sequence, pattern: Sequence) -> list[int]:
    _, trace = _classic_horspool(text, pattern)
    return trace


def _classic_horspool(text: Sequence, pattern: Sequence):
    n, m = len(text), len(pattern)
    matches: list[int] = []
    trace: list[int] = []
    if m == 0 or m > n:
        return matches, trace
    skip = {}
    for q in range(m - 1):
        skip[pattern[q]] = m - 1 - q
    last = pattern[m - 1]
    j = 0
    while j <= n - m:
        trace.append(j)
        c = text[j + m - 1]
        if c == last:
            q = 0
            while q < m - 1 and text[j + q] == pattern[q]:
                q += 1
            if q == m - 1:
                matches.append(j)
        j += skip.get(c, m)
    return matches, trace
