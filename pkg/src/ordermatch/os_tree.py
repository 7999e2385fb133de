"""Order-statistic tree over ``(value, index)`` pairs.

A size-augmented AVL tree.  Elements are ordered by value, with ties broken
by index (the earlier index is smaller), so every stored element is distinct
even when the underlying values repeat.

Besides insert/delete the tree answers rank, predecessor-index and
successor-index queries, each in O(log n).  Predecessor/successor queries
return :data:`NEG_INFINITY` / :data:`POS_INFINITY` when no such element
exists.
"""

from __future__ import annotations

import enum
from typing import Any, Iterator, Union


class Sentinel(enum.Enum):
    """Virtual positions standing for a character of -inf / +inf."""

    NEG_INFINITY = "-inf"
    POS_INFINITY = "inf"

    def __repr__(self) -> str:
        return self.value


NEG_INFINITY = Sentinel.NEG_INFINITY
POS_INFINITY = Sentinel.POS_INFINITY

IndexOrSentinel = Union[int, Sentinel]


class TreeStructureError(KeyError):
    """Raised on duplicate insertion or deletion of an absent element."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class _Node:
    __slots__ = ("key", "left", "right", "height", "size")

    def __init__(self, key: tuple[Any, int]) -> None:
        self.key = key
        self.left: _Node | None = None
        self.right: _Node | None = None
        self.height = 1
        self.size = 1


def _height(node: _Node | None) -> int:
    return node.height if node is not None else 0


def _size(node: _Node | None) -> int:
    return node.size if node is not None else 0


def _update(node: _Node) -> None:
    lh = node.left.height if node.left is not None else 0
    rh = node.right.height if node.right is not None else 0
    node.height = (lh if lh > rh else rh) + 1
    node.size = _size(node.left) + _size(node.right) + 1


def _rotate_right(node: _Node) -> _Node:
    pivot = node.left
    assert pivot is not None
    node.left = pivot.right
    pivot.right = node
    _update(node)
    _update(pivot)
    return pivot


def _rotate_left(node: _Node) -> _Node:
    pivot = node.right
    assert pivot is not None
    node.right = pivot.left
    pivot.left = node
    _update(node)
    _update(pivot)
    return pivot


def _rebalance(node: _Node) -> _Node:
    _update(node)
    balance = _height(node.left) - _height(node.right)
    if balance > 1:
        assert node.left is not None
        if _height(node.left.left) < _height(node.left.right):
            node.left = _rotate_left(node.left)
        return _rotate_right(node)
    if balance < -1:
        assert node.right is not None
        if _height(node.right.right) < _height(node.right.left):
            node.right = _rotate_right(node.right)
        return _rotate_left(node)
    return node


class OrderStatTree:
    """Dynamic ordered multiset of values, disambiguated by index.

    ``last_visits`` holds the number of nodes visited by the most recent
    operation and ``total_visits`` the running sum; both exist so tests can
    check the logarithmic bound.

    >>> t = OrderStatTree()
    >>> for i, v in enumerate((33, 42, 73, 57), start=1):
    ...     t.insert(v, i)
    >>> t.rank(57, 4), t.prev_index(57, 4), t.next_index(57, 4)
    (3, 2, 3)
    """

    def __init__(self) -> None:
        self._root: _Node | None = None
        self.last_visits = 0
        self.total_visits = 0

    def __len__(self) -> int:
        return _size(self._root)

    def __iter__(self) -> Iterator[tuple[Any, int]]:
        stack: list[_Node] = []
        node = self._root
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = node.left
            node = stack.pop()
            yield node.key
            node = node.right

    def __contains__(self, item: tuple[Any, int]) -> bool:
        node = self._root
        while node is not None:
            if item == node.key:
                return True
            node = node.left if item < node.key else node.right
        return False

    @property
    def height(self) -> int:
        return _height(self._root)

    def _count(self, visits: int) -> None:
        self.last_visits = visits
        self.total_visits += visits

    def insert(self, value: Any, index: int) -> None:
        """Insert ``(value, index)``; the pair must not already be stored."""
        key = (value, index)
        visits = 0

        def _insert(node: _Node | None) -> _Node:
            nonlocal visits
            if node is None:
                return _Node(key)
            visits += 1
            if key < node.key:
                node.left = _insert(node.left)
            elif node.key < key:
                node.right = _insert(node.right)
            else:
                raise TreeStructureError(f"element {key!r} already present")
            return _rebalance(node)

        self._root = _insert(self._root)
        self._count(visits + 1)

    def delete(self, value: Any, index: int) -> None:
        """Remove ``(value, index)``; the pair must be stored."""
        key = (value, index)
        visits = 0

        def _pop_min(node: _Node) -> tuple[_Node | None, _Node]:
            nonlocal visits
            visits += 1
            if node.left is None:
                return node.right, node
            node.left, smallest = _pop_min(node.left)
            return _rebalance(node), smallest

        def _delete(node: _Node | None) -> _Node | None:
            nonlocal visits
            if node is None:
                raise TreeStructureError(f"element {key!r} not present")
            visits += 1
            if key < node.key:
                node.left = _delete(node.left)
            elif node.key < key:
                node.right = _delete(node.right)
            else:
                if node.left is None:
                    return node.right
                if node.right is None:
                    return node.left
                right, successor = _pop_min(node.right)
                successor.left = node.left
                successor.right = right
                node = successor
            return _rebalance(node)

        self._root = _delete(self._root)
        self._count(visits)

    def rank(self, value: Any, index: int) -> int:
        """One plus the number of stored elements smaller than the query."""
        key = (value, index)
        smaller = 0
        visits = 0
        node = self._root
        while node is not None:
            visits += 1
            if node.key < key:
                smaller += _size(node.left) + 1
                node = node.right
            else:
                node = node.left
        self._count(visits)
        return smaller + 1

    def select(self, rank: int) -> tuple[Any, int]:
        """Return the stored element of the given 1-based rank."""
        if not 1 <= rank <= len(self):
            raise IndexError(f"rank {rank} out of range 1..{len(self)}")
        visits = 0
        node = self._root
        while True:
            assert node is not None
            visits += 1
            left = _size(node.left)
            if rank <= left:
                node = node.left
            elif rank == left + 1:
                self._count(visits)
                return node.key
            else:
                rank -= left + 1
                node = node.right

    def prev_index(self, value: Any, index: int) -> IndexOrSentinel:
        """Index of the largest stored element smaller than the query."""
        key = (value, index)
        best: _Node | None = None
        visits = 0
        node = self._root
        while node is not None:
            visits += 1
            if node.key < key:
                best = node
                node = node.right
            else:
                node = node.left
        self._count(visits)
        return best.key[1] if best is not None else NEG_INFINITY

    def next_index(self, value: Any, index: int) -> IndexOrSentinel:
        """Index of the smallest stored element greater than the query."""
        key = (value, index)
        best: _Node | None = None
        visits = 0
        node = self._root
        while node is not None:
            visits += 1
            if key < node.key:
                best = node
                node = node.left
            else:
                node = node.right
        self._count(visits)
        return best.key[1] if best is not None else POS_INFINITY

    def check(self) -> None:
        """Verify ordering, size and AVL balance bookkeeping (for tests)."""

        def _walk(node: _Node | None, lo: Any, hi: Any) -> tuple[int, int]:
            if node is None:
                return 0, 0
            if lo is not None and not lo < node.key:
                raise AssertionError(f"order violated at {node.key!r}")
            if hi is not None and not node.key < hi:
                raise AssertionError(f"order violated at {node.key!r}")
            lh, ls = _walk(node.left, lo, node.key)
            rh, rs = _walk(node.right, node.key, hi)
            if abs(lh - rh) > 1:
                raise AssertionError(f"unbalanced at {node.key!r}")
            if node.height != max(lh, rh) + 1 or node.size != ls + rs + 1:
                raise AssertionError(f"stale bookkeeping at {node.key!r}")
            return node.height, node.size

        _walk(self._root, None, None)
