"""
Search package: exact domination-cover solvability with witness strategies.
"""

from .dominance_store import DEFAULT_DOMINANCE_CAP, DominanceStore
from .reach_solver import (
    DEFAULT_MAX_NODES,
    Decision,
    Outcome,
    SearchStats,
    SolverOptions,
    solvable,
    verify_strategy,
)

__all__ = [
    "DEFAULT_DOMINANCE_CAP",
    "DEFAULT_MAX_NODES",
    "Decision",
    "DominanceStore",
    "Outcome",
    "SearchStats",
    "SolverOptions",
    "solvable",
    "verify_strategy",
]
