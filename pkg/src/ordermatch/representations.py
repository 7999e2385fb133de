"""Order-relation representations of numeric sequences.

All positions are 1-based in results: ``prefix_rep(x)[i - 1]`` is the rank
of ``x[i]``.  Values may repeat; equal values are ordered by position, the
earlier one being smaller.

* natural representation: rank of each value within the whole sequence;
* prefix representation: rank of each value within the prefix ending at it;
* nearest-neighbor representation: for each value, the positions of the
  closest smaller and closest larger values among those preceding it.

The windowed variants restrict each value's comparisons to its ``k``
immediate predecessors.
"""

from __future__ import annotations

from typing import Any, NamedTuple, Sequence

from .os_tree import IndexOrSentinel, OrderStatTree

NumericSequence = Sequence[Any]
NaturalRep = tuple[int, ...]
PrefixRep = tuple[int, ...]


class NearestNeighborRep(NamedTuple):
    prev: tuple[IndexOrSentinel, ...]
    next: tuple[IndexOrSentinel, ...]


def _check_window(k: int | None) -> None:
    if k is not None and k < 1:
        raise ValueError(f"window length must be a positive integer, got {k}")


def natural_rep(x: NumericSequence) -> NaturalRep:
    order = sorted(range(len(x)), key=lambda i: (x[i], i))
    ranks = [0] * len(x)
    for r, i in enumerate(order, start=1):
        ranks[i] = r
    return tuple(ranks)


def prefix_rep(x: NumericSequence) -> PrefixRep:
    tree = OrderStatTree()
    ranks = []
    for i, value in enumerate(x, start=1):
        tree.insert(value, i)
        ranks.append(tree.rank(value, i))
    return tuple(ranks)


def windowed_prefix_rep(x: NumericSequence, k: int) -> PrefixRep:
    """Rank of each ``x[i]`` within ``x[max(1, i-k)..i]``."""
    _check_window(k)
    tree = OrderStatTree()
    ranks = []
    for i, value in enumerate(x, start=1):
        tree.insert(value, i)
        if i - k - 1 >= 1:
            tree.delete(x[i - k - 2], i - k - 1)
        ranks.append(tree.rank(value, i))
    return tuple(ranks)


def nn_rep(x: NumericSequence, k: int | None = None) -> NearestNeighborRep:
    """Nearest smaller/larger predecessor positions.

    With ``k`` given, only the ``k`` immediate predecessors are considered.
    """
    _check_window(k)
    tree = OrderStatTree()
    prev: list[IndexOrSentinel] = []
    nxt: list[IndexOrSentinel] = []
    for i, value in enumerate(x, start=1):
        if k is not None and i - k - 1 >= 1:
            tree.delete(x[i - k - 2], i - k - 1)
        prev.append(tree.prev_index(value, i))
        nxt.append(tree.next_index(value, i))
        tree.insert(value, i)
    return NearestNeighborRep(tuple(prev), tuple(nxt))


def _validate_natural(s: Sequence[int]) -> None:
    if sorted(s) != list(range(1, len(s) + 1)):
        raise ValueError(f"not a permutation of 1..{len(s)}: {tuple(s)!r}")


def _validate_prefix(p: Sequence[int]) -> None:
    for i, r in enumerate(p, start=1):
        if not (isinstance(r, int) and 1 <= r <= i):
            raise ValueError(f"prefix rank {r!r} at position {i} outside 1..{i}")


def natural_to_prefix(s: Sequence[int]) -> PrefixRep:
    _validate_natural(s)
    return prefix_rep(s)


def prefix_to_natural(p: Sequence[int]) -> NaturalRep:
    _validate_prefix(p)
    n = len(p)
    # Walk backwards: position i takes the p[i]-th smallest rank still unused.
    free = OrderStatTree()
    for r in range(1, n + 1):
        free.insert(r, 0)
    ranks = [0] * n
    for i in range(n - 1, -1, -1):
        r, _ = free.select(p[i])
        free.delete(r, 0)
        ranks[i] = r
    return tuple(ranks)

