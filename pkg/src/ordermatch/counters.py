from __future__ import annotations

from dataclasses import asdict, dataclass


@dataclass
class OpCounters:
    """Operation counts collected by an instrumented run.

    Every matcher accepts an optional instance and only ever increments it.
    """

    comparisons: int = 0
    tree_inserts: int = 0
    tree_deletes: int = 0
    rank_queries: int = 0
    fail_transitions: int = 0

    def lines(self) -> list[str]:
        return [f"{key}={value}" for key, value in asdict(self).items()]
