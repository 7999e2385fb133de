"""Multiple-pattern order-preserving search with an Aho-Corasick automaton.

The trie is built over prefix representations, so a state stands for an
order pattern rather than for concrete values.  Failure links are computed
breadth first; because a rank depends on the values it is computed among,
the construction keeps one order-statistic tree per representative pattern
holding the values of the current candidate suffix.

By default each accepting position reports a single pattern, the longest one
ending there (smallest id on ties).  ``report_all=True`` reports every
pattern ending there.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Any, Sequence

from .counters import OpCounters
from .os_tree import OrderStatTree
from .representations import NumericSequence, PrefixRep, prefix_rep
from .single import MatchReport, match_at

ROOT = 0


@dataclass
class AcState:
    id: int
    depth: int
    rep_pattern: int
    parent: int = ROOT
    label: int = 0
    goto: dict[int, int] = field(default_factory=dict)
    fail: int = ROOT
    output: int | None = None
    # Patterns whose representation ends exactly here, ascending ids.
    terminals: list[int] = field(default_factory=list)
    # Nearest state on the failure chain (excluding this one) with terminals.
    dict_link: int | None = None


@dataclass
class AcAutomaton:
    states: list[AcState]
    patterns: list[tuple[Any, ...]]
    reps: list[PrefixRep]
    failures_built: bool = False

    def prefix_of(self, q: int) -> tuple[int, ...]:
        """The rank sequence spelled by the trie path to state ``q``."""
        labels = []
        while q != ROOT:
            labels.append(self.states[q].label)
            q = self.states[q].parent
        return tuple(reversed(labels))

    def state_for(self, prefix: Sequence[int]) -> int | None:
        q = ROOT
        for r in prefix:
            nxt = self.states[q].goto.get(r)
            if nxt is None:
                return None
            q = nxt
        return q

    def bfs_order(self) -> list[int]:
        order = [ROOT]
        for q in order:
            order.extend(self.states[q].goto[r] for r in sorted(self.states[q].goto))
        return order


def build_trie(patterns: Sequence[NumericSequence]) -> AcAutomaton:
    if not patterns:
        raise ValueError("at least one pattern is required")
    values = [tuple(p) for p in patterns]
    for pid, p in enumerate(values):
        if not p:
            raise ValueError(f"pattern {pid} is empty")
    reps = [prefix_rep(p) for p in values]
    states = [AcState(id=ROOT, depth=0, rep_pattern=0)]
    for pid, rep in enumerate(reps):
        q = ROOT
        for r in rep:
            nxt = states[q].goto.get(r)
            if nxt is None:
                nxt = len(states)
                states.append(AcState(id=nxt, depth=states[q].depth + 1,
                                      rep_pattern=pid, parent=q, label=r))
                states[q].goto[r] = nxt
            q = nxt
        states[q].terminals.append(pid)
        if states[q].output is None:
            states[q].output = pid
    return AcAutomaton(states, values, reps)


def build_ac_failure(automaton: AcAutomaton, counters: OpCounters | None = None) -> AcAutomaton:
    """Complete failure links and outputs in place; returns the automaton."""
    states = automaton.states
    patterns = automaton.patterns
    trees: dict[int, OrderStatTree] = {}
    # Oldest 1-based position of the representative pattern still in its tree.
    oldest: dict[int, int] = {}

    def insert(pid: int, pos: int) -> None:
        trees[pid].insert(patterns[pid][pos - 1], pos)
        if counters is not None:
            counters.tree_inserts += 1

    def delete_oldest(pid: int, count: int) -> None:
        for _ in range(count):
            pos = oldest[pid]
            trees[pid].delete(patterns[pid][pos - 1], pos)
            oldest[pid] = pos + 1
        if counters is not None:
            counters.tree_deletes += count

    def rank(pid: int, pos: int) -> int:
        if counters is not None:
            counters.rank_queries += 1
        return trees[pid].rank(patterns[pid][pos - 1], pos)

    states[ROOT].fail = ROOT
    queue = deque([ROOT])
    while queue:
        qi = queue.popleft()
        parent = states[qi]
        for label in sorted(parent.goto):
            qj = parent.goto[label]
            child = states[qj]
            queue.append(qj)
            pid = child.rep_pattern
            if qi == ROOT:
                # A single value only matches the root's own suffix.
                child.fail = ROOT
                trees[pid] = OrderStatTree()
                oldest[pid] = child.depth + 1
            else:
                if pid != parent.rep_pattern or pid not in trees:
                    # Load the suffix that the parent's failure state spells.
                    trees[pid] = OrderStatTree()
                    keep = states[parent.fail].depth
                    oldest[pid] = parent.depth - keep + 1
                    for pos in range(oldest[pid], parent.depth + 1):
                        insert(pid, pos)
                insert(pid, child.depth)
                r = rank(pid, child.depth)
                qh = parent.fail
                while r not in states[qh].goto:
                    qp, qh = qh, states[qh].fail
                    delete_oldest(pid, states[qp].depth - states[qh].depth)
                    r = rank(pid, child.depth)
                    if counters is not None:
                        counters.fail_transitions += 1
                child.fail = states[qh].goto[r]
            target = states[child.fail]
            if child.output is None:
                child.output = target.output
            child.dict_link = child.fail if target.terminals else target.dict_link
    automaton.failures_built = True
    return automaton


def build_automaton(patterns: Sequence[NumericSequence],
                    counters: OpCounters | None = None) -> AcAutomaton:
    return build_ac_failure(build_trie(patterns), counters)


def search_multi(
    T: NumericSequence,
    automaton: AcAutomaton,
    report_all: bool = False,
    counters: OpCounters | None = None,
    trace: list[tuple[str, int, int, int]] | None = None,
) -> list[MatchReport]:
    """Scan ``T`` once, reporting matches ordered by end then pattern id.

    When ``trace`` is a list, one ``(kind, from_state, to_state, rank)``
    tuple is appended per transition, ``kind`` being ``"goto"`` or
    ``"fail"``.
    """
    if not automaton.failures_built:
        raise ValueError("failure links not built; call build_ac_failure first")
    states = automaton.states
    lengths = [len(p) for p in automaton.patterns]
    out: list[MatchReport] = []
    tree = OrderStatTree()
    lo = 1
    q = ROOT
    for i, value in enumerate(T, start=1):
        tree.insert(value, i)
        if counters is not None:
            counters.tree_inserts += 1
            counters.rank_queries += 1
        r = tree.rank(value, i)
        while r not in states[q].goto:
            # The root accepts rank 1, which is all a one-value window has.
            f = states[q].fail
            for pos in range(lo, i - states[f].depth):
                tree.delete(T[pos - 1], pos)
            if counters is not None:
                counters.tree_deletes += max(0, i - states[f].depth - lo)
                counters.fail_transitions += 1
                counters.rank_queries += 1
            lo = max(lo, i - states[f].depth)
            r = tree.rank(value, i)
            if trace is not None:
                trace.append(("fail", q, f, r))
            q = f
        nxt = states[q].goto[r]
        if trace is not None:
            trace.append(("goto", q, nxt, r))
        q = nxt
        if report_all:
            found = []
            s: int | None = q if states[q].terminals else states[q].dict_link
            while s is not None:
                found.extend(states[s].terminals)
                s = states[s].dict_link
            for pid in sorted(found):
                out.append(match_at(pid, i, lengths[pid]))
        elif states[q].output is not None:
            pid = states[q].output
            out.append(match_at(pid, i, lengths[pid]))
    return out
