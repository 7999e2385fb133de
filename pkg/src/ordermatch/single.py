"""Single-pattern order-preserving search (KMP style).

Two variants share one failure function:

* the prefix variant keeps an order-statistic tree over the currently
  matched text window and compares ranks;
* the nearest-neighbor variant needs no tree at search time: whether the
  next text value extends the match is decided by comparing it with at most
  two earlier text values.

Both accept an index built with ``window_k``, in which case order relations
are only checked between each value and its ``window_k`` predecessors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .counters import OpCounters
from .os_tree import NEG_INFINITY, POS_INFINITY, IndexOrSentinel, OrderStatTree
from .representations import (
    NearestNeighborRep,
    NumericSequence,
    PrefixRep,
    nn_rep,
    prefix_rep,
    windowed_prefix_rep,
)

FailureFunction = tuple[int, ...]


@dataclass(frozen=True, order=True)
class MatchReport:
    """One occurrence; ordered by end position, then pattern id."""

    end: int
    pattern_id: int
    start: int

    def __repr__(self) -> str:
        return f"MatchReport(pattern_id={self.pattern_id}, start={self.start}, end={self.end})"


def match_at(pattern_id: int, end: int, m: int) -> MatchReport:
    return MatchReport(end=end, pattern_id=pattern_id, start=end - m + 1)


class _WindowTree:
    """Tree over ``seq[lo..hi]`` (1-based) that only ever drops its oldest end."""

    def __init__(self, seq: NumericSequence, counters: OpCounters | None) -> None:
        self.seq = seq
        self.tree = OrderStatTree()
        self.lo = 1
        self.counters = counters

    def push(self, i: int) -> None:
        self.tree.insert(self.seq[i - 1], i)
        if self.counters is not None:
            self.counters.tree_inserts += 1

    def drop_before(self, lo: int) -> None:
        while self.lo < lo:
            self.tree.delete(self.seq[self.lo - 1], self.lo)
            if self.counters is not None:
                self.counters.tree_deletes += 1
            self.lo += 1

    def rank(self, i: int) -> int:
        if self.counters is not None:
            self.counters.rank_queries += 1
        return self.tree.rank(self.seq[i - 1], i)


def _span(window_k: int | None, m: int) -> int:
    # A window of m - 1 predecessors never truncates within a match.
    return m if window_k is None else window_k


def build_failure_prefix(
    P: NumericSequence,
    mu: PrefixRep,
    window_k: int | None = None,
    counters: OpCounters | None = None,
) -> FailureFunction:
    """Failure function from the (possibly windowed) prefix representation.

    ``pi[q - 1]`` is the length of the longest proper prefix of ``P`` that is
    order-isomorphic to the suffix of ``P[1..q]`` of the same length.
    """
    m = len(P)
    if len(mu) != m:
        raise ValueError(f"pattern has length {m} but representation has {len(mu)}")
    if m == 0:
        raise ValueError("pattern must be nonempty")
    k = _span(window_k, m)
    pi = [0] * (m + 1)
    window = _WindowTree(P, counters)
    window.lo = 2
    j = 0
    for q in range(2, m + 1):
        # Tree holds P[q-j..q-1] clipped to the last k values.
        window.push(q)
        window.drop_before(max(q - j, q - k))
        r = window.rank(q)
        while j > 0 and r != mu[j]:
            j = pi[j]
            window.drop_before(max(q - j, q - k))
            r = window.rank(q)
        j += 1
        pi[q] = j
    return tuple(pi[1:])


def _violates(seq: NumericSequence, pos: int, low: int | None, high: int | None,
              counters: OpCounters | None) -> bool:
    """True unless ``seq[low] < seq[pos] < seq[high]`` in (value, index) order.

    ``low``/``high`` are earlier positions, or None for the infinite
    sentinels.  Since both precede ``pos``, a tie with ``seq[low]`` counts as
    larger and a tie with ``seq[high]`` as smaller.
    """
    value = seq[pos - 1]
    if counters is not None:
        counters.comparisons += 1
    if low is not None and value < seq[low - 1]:
        return True
    if counters is not None:
        counters.comparisons += 1
    return high is not None and value >= seq[high - 1]


def _as_offset(j: IndexOrSentinel) -> int | None:
    return None if j is NEG_INFINITY or j is POS_INFINITY else j  # type: ignore[return-value]


def build_failure_nn(
    P: NumericSequence,
    nu: NearestNeighborRep,
    counters: OpCounters | None = None,
) -> FailureFunction:
    """Failure function from the nearest-neighbor representation; no tree."""
    m = len(P)
    if len(nu.prev) != m or len(nu.next) != m:
        raise ValueError(f"pattern has length {m} but representation does not")
    if m == 0:
        raise ValueError("pattern must be nonempty")
    prev = [_as_offset(j) for j in nu.prev]
    nxt = [_as_offset(j) for j in nu.next]
    pi = [0] * (m + 1)
    j = 0
    for q in range(2, m + 1):
        while j > 0 and _violates(
            P, q,
            None if prev[j] is None else q - j + prev[j] - 1,
            None if nxt[j] is None else q - j + nxt[j] - 1,
            counters,
        ):
            j = pi[j]
            if counters is not None:
                counters.fail_transitions += 1
        j += 1
        pi[q] = j
    return tuple(pi[1:])


@dataclass(frozen=True)
class SinglePatternIndex:
    """Preprocessed pattern: representations plus failure function."""

    pattern: tuple[Any, ...]
    mu: PrefixRep
    nu: NearestNeighborRep
    pi: FailureFunction
    window_k: int | None = None

    @classmethod
    def build(cls, pattern: NumericSequence, window_k: int | None = None) -> SinglePatternIndex:
        if window_k is not None and window_k < 1:
            raise ValueError(f"window length must be a positive integer, got {window_k}")
        pattern = tuple(pattern)
        if not pattern:
            raise ValueError("pattern must be nonempty")
        if window_k is None:
            mu = prefix_rep(pattern)
        else:
            mu = windowed_prefix_rep(pattern, window_k)
        nu = nn_rep(pattern, window_k)
        pi = build_failure_prefix(pattern, mu, window_k)
        return cls(pattern, mu, nu, pi, window_k)

    def __len__(self) -> int:
        return len(self.pattern)


def search_prefix(
    T: NumericSequence,
    idx: SinglePatternIndex,
    counters: OpCounters | None = None,
    pattern_id: int = 0,
    trace: list[tuple[int, int, int]] | None = None,
) -> list[MatchReport]:
    """Scan ``T`` with rank comparisons on a tree over the matched window.

    ``trace`` collects one ``(i, q, pi[q])`` tuple per mismatch fallback at
    text position ``i``.
    """
    n, m = len(T), len(idx)
    mu, pi = idx.mu, idx.pi
    k = _span(idx.window_k, m)
    out: list[MatchReport] = []
    if m > n:
        return out
    window = _WindowTree(T, counters)
    q = 0
    for i in range(1, n + 1):
        # Tree holds T[i-q..i-1] clipped to the last k values.
        window.push(i)
        window.drop_before(max(i - q, i - k))
        r = window.rank(i)
        while q > 0 and r != mu[q]:
            if trace is not None:
                trace.append((i, q, pi[q - 1]))
            q = pi[q - 1]
            if counters is not None:
                counters.fail_transitions += 1
            window.drop_before(max(i - q, i - k))
            r = window.rank(i)
        q += 1
        if q == m:
            out.append(match_at(pattern_id, i, m))
            q = pi[q - 1]
            # Keep the tree aligned with the shortened match.
            window.drop_before(i + 1 - q)
    return out


def search_nn(
    T: NumericSequence,
    idx: SinglePatternIndex,
    counters: OpCounters | None = None,
    pattern_id: int = 0,
    trace: list[tuple[int, int, int]] | None = None,
) -> list[MatchReport]:
    """Scan ``T`` using nearest-neighbor checks only (linear time)."""
    n, m = len(T), len(idx)
    pi = idx.pi
    prev = [_as_offset(j) for j in idx.nu.prev]
    nxt = [_as_offset(j) for j in idx.nu.next]
    out: list[MatchReport] = []
    if m > n:
        return out
    q = 0
    for i in range(1, n + 1):
        while q > 0 and _violates(
            T, i,
            None if prev[q] is None else i - q + prev[q] - 1,
            None if nxt[q] is None else i - q + nxt[q] - 1,
            counters,
        ):
            if trace is not None:
                trace.append((i, q, pi[q - 1]))
            q = pi[q - 1]
            if counters is not None:
                counters.fail_transitions += 1
        q += 1
        if q == m:
            out.append(match_at(pattern_id, i, m))
            q = pi[q - 1]
    return out


def search_windowed(
    T: NumericSequence,
    idx: SinglePatternIndex,
    k: int,
    method: str = "prefix",
    counters: OpCounters | None = None,
) -> list[MatchReport]:
    """Search comparing each value only with its ``k`` predecessors.

    ``idx`` must have been built with ``window_k=k``.
    """
    if k < 1:
        raise ValueError(f"window length must be a positive integer, got {k}")
    if idx.window_k != k:
        raise ValueError(f"index built with window {idx.window_k}, search asked for {k}")
    if method == "prefix":
        return search_prefix(T, idx, counters)
    if method == "nn":
        return search_nn(T, idx, counters)
    raise ValueError(f"unknown method {method!r}")


def search(
    T: NumericSequence,
    pattern: NumericSequence,
    algorithm: str = "kmp-nn",
    window_k: int | None = None,
    counters: OpCounters | None = None,
) -> list[MatchReport]:
    """Convenience wrapper: build the index and scan with one algorithm."""
    idx = SinglePatternIndex.build(pattern, window_k)
    if algorithm == "kmp-prefix":
        return search_prefix(T, idx, counters)
    if algorithm == "kmp-nn":
        return search_nn(T, idx, counters)
    raise ValueError(f"unknown algorithm {algorithm!r}")

