"""Order-preserving pattern matching on numeric sequences."""

from .counters import OpCounters
from .multi import AcAutomaton, build_ac_failure, build_automaton, build_trie, search_multi
from .os_tree import NEG_INFINITY, POS_INFINITY, OrderStatTree, TreeStructureError
from .representations import (
    NearestNeighborRep,
    natural_rep,
    natural_to_prefix,
    nn_rep,
    prefix_rep,
    prefix_to_natural,
    windowed_prefix_rep,
)
from .single import (
    MatchReport,
    SinglePatternIndex,
    build_failure_nn,
    build_failure_prefix,
    search,
    search_nn,
    search_prefix,
    search_windowed,
)

__all__ = [
    "AcAutomaton",
    "MatchReport",
    "NEG_INFINITY",
    "NearestNeighborRep",
    "OpCounters",
    "OrderStatTree",
    "POS_INFINITY",
    "SinglePatternIndex",
    "TreeStructureError",
    "build_ac_failure",
    "build_automaton",
    "build_failure_nn",
    "build_failure_prefix",
    "build_trie",
    "natural_rep",
    "natural_to_prefix",
    "nn_rep",
    "prefix_rep",
    "prefix_to_natural",
    "search",
    "search_multi",
    "search_nn",
    "search_prefix",
    "search_windowed",
    "windowed_prefix_rep",
]
