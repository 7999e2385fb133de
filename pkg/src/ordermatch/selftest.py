"""Embedded worked examples, runnable without the test suite."""

from __future__ import annotations

from typing import Callable

from .multi import build_automaton, search_multi
from .oracle import naive_search
from .os_tree import NEG_INFINITY as NEG
from .os_tree import POS_INFINITY as POS
from .representations import natural_rep, nn_rep, prefix_rep
from .single import SinglePatternIndex, build_failure_nn, search_nn, search_prefix

PATTERN = (33, 42, 73, 57, 63, 87, 95, 79)
TEXT = (11, 15, 33, 21, 24, 50, 29, 36, 73, 85, 63, 69, 78, 88, 44, 62)
MULTI = [(23, 35, 15, 53, 47), (66, 71, 57, 79, 84, 93), (43, 51, 62, 73)]


def _representations() -> bool:
    nn = nn_rep(PATTERN)
    idx = SinglePatternIndex.build(PATTERN)
    return (
        prefix_rep(PATTERN) == (1, 2, 3, 3, 4, 6, 7, 6)
        and natural_rep(PATTERN) == (1, 2, 5, 3, 4, 7, 8, 6)
        and nn.prev == (NEG, 1, 2, 2, 4, 3, 6, 3)
        and nn.next == (POS, POS, POS, 3, 3, POS, POS, 6)
        and idx.pi == (0, 1, 2, 1, 2, 3, 3, 1)
        and build_failure_nn(PATTERN, nn) == idx.pi
    )


def _single_search() -> bool:
    idx = SinglePatternIndex.build(PATTERN)
    spans = {
        tuple((r.start, r.end) for r in found)
        for found in (search_prefix(TEXT, idx), search_nn(TEXT, idx), naive_search(TEXT, PATTERN))
    }
    return spans == {((4, 11),)}


def _multi_automaton() -> bool:
    ac = build_automaton(MULTI)
    if ac.reps != [(1, 2, 1, 4, 4), (1, 2, 1, 4, 5, 6), (1, 2, 3, 4)]:
        return False
    links = {(1, 2, 1, 4): (1, 2), (1, 2, 1, 4, 4): (1,), (1, 2, 1, 4, 5): (1, 2, 3)}
    for prefix, expected in links.items():
        q = ac.state_for(prefix)
        if q is None or ac.prefix_of(ac.states[q].fail) != expected:
            return False
    trace: list[tuple[str, int, int, int]] = []
    search_multi((20, 30, 10, 15), ac, trace=trace)
    steps = [(kind, ac.prefix_of(a), ac.prefix_of(b), r) for kind, a, b, r in trace]
    return steps[-3:] == [
        ("goto", (1, 2), (1, 2, 1), 1),
        ("fail", (1, 2, 1), (1,), 2),
        ("goto", (1,), (1, 2), 2),
    ]


CHECKS: list[tuple[str, Callable[[], bool]]] = [
    ("representations and failure function of the worked pattern", _representations),
    ("single-pattern search finds the worked match at 4..11", _single_search),
    ("multi-pattern automaton, failure links and scan transcript", _multi_automaton),
]


def run_selftest() -> list[tuple[str, bool]]:
    return [(name, check()) for name, check in CHECKS]
