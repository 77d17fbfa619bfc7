"""
Pebbles package: configurations, moves, strategies and the cover goal.
"""

from .pebble_state import (
    Configuration,
    ConfigurationFormatError,
    IllegalMoveError,
    InsufficientPebblesError,
    NonAdjacentMoveError,
    PebblingMove,
    ReplayError,
    Strategy,
    apply_move,
    is_domination_cover,
    replay,
    weak_compositions,
)

__all__ = [
    "Configuration",
    "ConfigurationFormatError",
    "IllegalMoveError",
    "InsufficientPebblesError",
    "NonAdjacentMoveError",
    "PebblingMove",
    "ReplayError",
    "Strategy",
    "apply_move",
    "is_domination_cover",
    "replay",
    "weak_compositions",
]
