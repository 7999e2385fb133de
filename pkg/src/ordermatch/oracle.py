"""Brute-force reference implementations and random instance generators.

Nothing here touches the order-statistic tree or the fast matchers, so
results can serve as independent ground truth.  Ties are broken by position
exactly as in the fast paths.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Iterator, Sequence

from .single import MatchReport, match_at

NumericSequence = Sequence[Any]


def ranks(x: NumericSequence) -> tuple[int, ...]:
    """Natural representation by counting, O(n^2)."""
    return tuple(
        1 + sum(1 for j in range(len(x)) if (x[j], j) < (x[i], i))
        for i in range(len(x))
    )


def window_ranks(x: NumericSequence, k: int | None = None) -> tuple[int, ...]:
    """Rank of each value among itself and its ``k`` predecessors (all if None)."""
    out = []
    for i in range(len(x)):
        lo = 0 if k is None else max(0, i - k)
        out.append(1 + sum(1 for j in range(lo, i) if x[j] <= x[i]))
    return tuple(out)


def naive_search(T: NumericSequence, P: NumericSequence,
                 window_k: int | None = None, pattern_id: int = 0) -> list[MatchReport]:
    """Compare the representation of every length-m window with the pattern's."""
    n, m = len(T), len(P)
    if m == 0 or m > n:
        return []
    if window_k is None:
        target = ranks(P)
        return [match_at(pattern_id, s + m, m) for s in range(n - m + 1)
                if ranks(T[s:s + m]) == target]
    target = window_ranks(P, window_k)
    return [match_at(pattern_id, s + m, m) for s in range(n - m + 1)
            if window_ranks(T[s:s + m], window_k) == target]


def naive_failure(P: NumericSequence, window_k: int | None = None) -> tuple[int, ...]:
    """Failure function straight from its definition, testing every length."""
    pi = []
    for q in range(1, len(P) + 1):
        best = 0
        for k in range(q - 1, 0, -1):
            if window_ranks(P[:k], window_k) == window_ranks(P[q - k:q], window_k):
                best = k
                break
        pi.append(best)
    return tuple(pi)


def naive_multi(T: NumericSequence, patterns: Sequence[NumericSequence],
                report_all: bool = False) -> list[MatchReport]:
    """Union of single-pattern searches.

    Unless ``report_all``, only the longest pattern ending at each position
    is kept, the smallest id winning ties.
    """
    found = sorted(
        match for pid, P in enumerate(patterns) for match in naive_search(T, P, pattern_id=pid)
    )
    if report_all:
        return found
    best: dict[int, MatchReport] = {}
    for match in found:
        kept = best.get(match.end)
        if kept is None or match.start < kept.start:
            best[match.end] = match
    return [best[end] for end in sorted(best)]


@dataclass(frozen=True)
class GeneratorConfig:
    text_len_max: int = 50
    pattern_len_max: int = 8
    value_range: tuple[int, int] = (1, 10)
    pattern_count_max: int = 1
    seed: int = 0

    def __post_init__(self) -> None:
        if self.text_len_max < 1 or self.pattern_len_max < 1 or self.pattern_count_max < 1:
            raise ValueError(f"lengths and counts must be positive: {self}")
        lo, hi = self.value_range
        if lo > hi:
            raise ValueError(f"empty value range {self.value_range}")
        if self.seed < 0:
            raise ValueError(f"seed must be unsigned, got {self.seed}")


Instance = tuple[list[int], list[list[int]]]


def generate(config: GeneratorConfig) -> Iterator[Instance]:
    """Endless deterministic stream of ``(text, patterns)`` instances.

    Patterns are sometimes cut out of the text so that matches are common.
    """
    rng = random.Random(config.seed)
    lo, hi = config.value_range
    while True:
        n = rng.randint(0, config.text_len_max)
        text = [rng.randint(lo, hi) for _ in range(n)]
        patterns = []
        for _ in range(rng.randint(1, config.pattern_count_max)):
            m = rng.randint(1, config.pattern_len_max)
            if n >= m and rng.random() < 0.5:
                s = rng.randint(0, n - m)
                # Shift so the values differ while the order is kept.
                shift = rng.randint(-3, 3)
                patterns.append([v + shift for v in text[s:s + m]])
            else:
                patterns.append([rng.randint(lo, hi) for _ in range(m)])
        yield text, patterns
