"""
Dominance Store
Bounded set of maximal unsolvable search states with pointwise-<= lookup.
"""

import logging
import threading
from typing import Sequence

import numpy as np

logger = logging.getLogger(__name__)

DEFAULT_DOMINANCE_CAP = 10**5


class DominanceStore:
    """Keeps maximal known-unsolvable rows; a query row is covered when some
    stored row is pointwise >= it.

    Rows are fixed-width integer vectors. Only maximal rows are kept and the
    least recently useful row is evicted once ``cap`` is reached; eviction
    loses speed, never correctness. Safe to share between threads.
    """

    def __init__(self, width: int, cap: int = DEFAULT_DOMINANCE_CAP):
        if cap < 1:
            raise ValueError(f"dominance store cap must be >= 1, got {cap}")
        self.width = width
        self.cap = cap
        self._rows = np.zeros((min(cap, 256), width), dtype=np.int64)
        self._stamps = np.zeros(len(self._rows), dtype=np.int64)
        self._size = 0
        self._clock = 0
        self.evictions = 0
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return self._size

    def covers(self, row: Sequence[int]) -> bool:
        query = np.asarray(row, dtype=np.int64)
        with self._lock:
            if self._size == 0:
                return False
            hits = np.flatnonzero((self._rows[: self._size] >= query).all(axis=1))
            if hits.size == 0:
                return False
            self._clock += 1
            self._stamps[hits[0]] = self._clock
            return True

    def insert(self, row: Sequence[int]) -> None:
        new = np.asarray(row, dtype=np.int64)
        with self._lock:
            live = self._rows[: self._size]
            if self._size and (live >= new).all(axis=1).any():
                return

            # Drop rows the new one dominates
            keep = ~(live <= new).all(axis=1)
            if not keep.all():
                kept = int(keep.sum())
                self._rows[:kept] = live[keep]
                self._stamps[:kept] = self._stamps[: self._size][keep]
                self._size = kept

            if self._size >= self.cap:
                victim = int(np.argmin(self._stamps[: self._size]))
                last = self._size - 1
                self._rows[victim] = self._rows[last]
                self._stamps[victim] = self._stamps[last]
                self._size = last
                self.evictions += 1

            if self._size == len(self._rows):
                grown = min(self.cap, 2 * len(self._rows))
                self._rows = np.resize(self._rows, (grown, self.width))
                self._stamps = np.resize(self._stamps, grown)

            self._clock += 1
            self._rows[self._size] = new
            self._stamps[self._size] = self._clock
            self._size += 1
