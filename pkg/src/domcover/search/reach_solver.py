"""
Reach Solver
Decides whether a configuration can be pebbled into a domination cover and
produces a replayable witness strategy when it can.
"""

import logging
import time
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any, Dict, Iterator, List, Optional, Set, Tuple

from ..graphs.graph_core import Graph
from ..pebbles.pebble_state import (
    Configuration,
    PebblingMove,
    ReplayError,
    Strategy,
    is_domination_cover,
    replay,
    weak_compositions,
)
from .dominance_store import DEFAULT_DOMINANCE_CAP, DominanceStore

logger = logging.getLogger(__name__)

DEFAULT_MAX_NODES = 10**8


class Outcome(str, Enum):
    SOLVABLE = "solvable"
    UNSOLVABLE = "unsolvable"
    UNKNOWN = "unknown"


@dataclass
class SolverOptions:
    """Search tunables.

    ``prune_acyclic`` switches from move-by-move expansion to the sweep
    expansion (vertices emit all their moves at once, then freeze). The
    other flags toggle the individual prunings; with all three off the
    search is the plain exhaustive oracle.
    """

    max_nodes: int = DEFAULT_MAX_NODES
    prune_dominance: bool = True
    prune_potential: bool = True
    prune_acyclic: bool = True
    dominance_cap: int = DEFAULT_DOMINANCE_CAP
    shared_store: Optional[DominanceStore] = None

    @classmethod
    def unpruned(cls, max_nodes: int = DEFAULT_MAX_NODES) -> "SolverOptions":
        return cls(
            max_nodes=max_nodes,
            prune_dominance=False,
            prune_potential=False,
            prune_acyclic=False,
        )


@dataclass
class SearchStats:
    nodes_expanded: int = 0
    nodes_visited: int = 0
    memo_hits: int = 0
    dominance_hits: int = 0
    potential_prunes: int = 0
    peak_frontier: int = 0
    seconds: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class Decision:
    outcome: Outcome
    witness: Optional[Strategy]
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def solvable(self) -> bool:
        return self.outcome is Outcome.SOLVABLE

    def to_dict(self) -> Dict[str, Any]:
        return {
            "outcome": self.outcome.value,
            "solvable": self.solvable,
            "witness": self.witness.to_dict() if self.witness is not None else None,
            "stats": self.stats.to_dict(),
        }


class _BudgetExceeded(Exception):
    pass


# A search state is the count vector plus a bitmask of frozen vertices
# (always 0 for move-by-move expansion).
_State = Tuple[Tuple[int, ...], int]
_Child = Tuple[Tuple[int, ...], int, List[PebblingMove]]


class _Search:
    """One depth-first search over configurations of a fixed graph."""

    def __init__(self, g: Graph, options: SolverOptions):
        self.g = g
        self.n = g.n
        self.options = options
        self.stats = SearchStats()
        self.failed: Set[_State] = set()
        self.open_bits_cache: Dict[int, Tuple[int, ...]] = {}

        self.store: Optional[DominanceStore] = None
        if options.prune_dominance:
            if options.shared_store is not None:
                self.store = options.shared_store
            else:
                self.store = DominanceStore(2 * self.n, options.dominance_cap)

        if options.prune_potential:
            # reach weight of u toward x is 2^(D - d(u, x)); a pebble can land
            # on x only if the weighted sum is at least 2^D. Python ints, so
            # large stacks on long graphs never overflow.
            dist: List[List[int]] = g.distances.tolist()
            diameter = max(max(row) for row in dist) if self.n else 0
            self.weights = [[1 << (diameter - d) for d in row] for row in dist]
            self.threshold = 1 << diameter

    # ── state bookkeeping ──────────────────────────────────────────────────

    def _open_bits(self, frozen: int) -> Tuple[int, ...]:
        bits = self.open_bits_cache.get(frozen)
        if bits is None:
            bits = tuple(0 if frozen >> v & 1 else 1 for v in range(self.n))
            self.open_bits_cache[frozen] = bits
        return bits

    def _row(self, counts: Tuple[int, ...], frozen: int) -> Tuple[int, ...]:
        # pointwise-<= on (counts, openness) is exactly "at most as solvable"
        return counts + self._open_bits(frozen)

    def _hopeless(self, counts: Tuple[int, ...], frozen: int) -> bool:
        """Weight-function test: some vertex can never get a pebble nearby."""
        sources = [u for u in range(self.n) if counts[u] and not frozen >> u & 1]
        reachable = 0
        for x in range(self.n):
            if frozen >> x & 1:
                # frozen counts are final
                if counts[x]:
                    reachable |= 1 << x
                continue
            potential = sum(counts[u] * self.weights[u][x] for u in sources)
            if potential >= self.threshold:
                reachable |= 1 << x
        return any(not mask & reachable for mask in self.g.closed_masks)

    def _mark_failed(self, counts: Tuple[int, ...], frozen: int) -> None:
        self.failed.add((counts, frozen))
        if self.store is not None:
            self.store.insert(self._row(counts, frozen))

    def _enter(self, counts: Tuple[int, ...], frozen: int, depth: int) -> Optional[bool]:
        """True: goal reached. False: pruned. None: expand this state."""
        self.stats.nodes_visited += 1
        if self.g.dominates_mask(_support(counts)):
            return True
        if (counts, frozen) in self.failed:
            self.stats.memo_hits += 1
            return False
        if self.store is not None and self.store.covers(self._row(counts, frozen)):
            self.stats.dominance_hits += 1
            return False
        if self.options.prune_potential and self._hopeless(counts, frozen):
            self.stats.potential_prunes += 1
            self._mark_failed(counts, frozen)
            return False

        self.stats.nodes_expanded += 1
        if self.stats.nodes_expanded > self.options.max_nodes:
            raise _BudgetExceeded()
        self.stats.peak_frontier = max(self.stats.peak_frontier, depth + 1)
        return None

    # ── expansions ─────────────────────────────────────────────────────────

    def _single_moves(self, counts: Tuple[int, ...], frozen: int) -> Iterator[_Child]:
        """One legal move at a time, lexicographic by (from, to)."""
        for u in range(self.n):
            if counts[u] < 2:
                continue
            for v in self.g.adjacency[u]:
                child = list(counts)
                child[u] -= 2
                child[v] += 1
                yield tuple(child), frozen, [PebblingMove(u, v)]

    def _sweeps(self, counts: Tuple[int, ...], frozen: int) -> Iterator[_Child]:
        """Let one open vertex emit all of its moves to open neighbours and freeze.

        Only maximal emissions are tried: floor(c/2) moves, plus c/2 - 1 when
        that keeps one pebble behind. A frozen vertex's count is final, so it
        is stored as min(count, 1).
        """
        for v in range(self.n):
            c = counts[v]
            if c < 2 or frozen >> v & 1:
                continue
            targets = [w for w in self.g.adjacency[v] if not frozen >> w & 1]
            if not targets:
                continue
            totals = [c // 2]
            if c % 2 == 0 and c >= 4:
                totals.append(c // 2 - 1)
            for total in totals:
                for split in weak_compositions(total, len(targets)):
                    child = list(counts)
                    child[v] = min(c - 2 * total, 1)
                    moves: List[PebblingMove] = []
                    for w, k in zip(targets, split):
                        child[w] += k
                        moves.extend([PebblingMove(v, w)] * k)
                    yield tuple(child), frozen | (1 << v), moves

    # ── driver ─────────────────────────────────────────────────────────────

    def run(self, counts: Tuple[int, ...]) -> Optional[List[PebblingMove]]:
        """Iterative DFS; returns the witness moves or None when exhausted."""
        expand = self._sweeps if self.options.prune_acyclic else self._single_moves

        verdict = self._enter(counts, 0, 0)
        if verdict is not None:
            return [] if verdict else None

        # frames: (counts, frozen, child iterator, moves leading into the frame)
        stack: List[Tuple[Tuple[int, ...], int, Iterator[_Child], List[PebblingMove]]]
        stack = [(counts, 0, expand(counts, 0), [])]
        while stack:
            state_counts, state_frozen, children, _ = stack[-1]
            nxt = next(children, None)
            if nxt is None:
                self._mark_failed(state_counts, state_frozen)
                stack.pop()
                continue
            child_counts, child_frozen, moves = nxt
            verdict = self._enter(child_counts, child_frozen, len(stack))
            if verdict is True:
                path = [m for frame in stack[1:] for m in frame[3]]
                return path + moves
            if verdict is None:
                stack.append(
                    (child_counts, child_frozen, expand(child_counts, child_frozen), moves)
                )
        return None


def _support(counts: Tuple[int, ...]) -> int:
    mask = 0
    for v, c in enumerate(counts):
        if c:
            mask |= 1 << v
    return mask


def solvable(
    g: Graph, c: Configuration, opts: Optional[SolverOptions] = None
) -> Decision:
    """Exact domination-cover solvability of ``c`` on ``g``.

    Returns ``UNKNOWN`` instead of a guess when ``opts.max_nodes`` runs out.
    A configuration without pebbles is unsolvable on any nonempty graph.
    """
    opts = opts or SolverOptions()
    c.require_size(g)
    started = time.perf_counter()

    if c.total == 0:
        outcome = Outcome.SOLVABLE if g.n == 0 else Outcome.UNSOLVABLE
        witness = Strategy() if g.n == 0 else None
        return Decision(outcome, witness, SearchStats())

    search = _Search(g, opts)
    try:
        moves = search.run(c.counts)
    except _BudgetExceeded:
        search.stats.seconds = time.perf_counter() - started
        logger.warning(
            f"Search budget of {opts.max_nodes} nodes exhausted on {g.describe()} "
            f"with {c.total} pebbles"
        )
        return Decision(Outcome.UNKNOWN, None, search.stats)

    search.stats.seconds = time.perf_counter() - started
    if moves is None:
        logger.debug(
            f"Unsolvable: {c.to_compact()} on {g.describe()} "
            f"({search.stats.nodes_expanded} nodes)"
        )
        return Decision(Outcome.UNSOLVABLE, None, search.stats)

    logger.debug(
        f"Solvable: {c.to_compact()} on {g.describe()} with {len(moves)} moves "
        f"({search.stats.nodes_expanded} nodes)"
    )
    return Decision(Outcome.SOLVABLE, Strategy(tuple(moves)), search.stats)


def verify_strategy(g: Graph, c: Configuration, s: Strategy) -> bool:
    """Independent witness check: replay ``s`` and test the cover goal."""
    try:
        final = replay(g, c, s)
    except ReplayError as e:
        logger.warning(f"Strategy rejected on {g.describe()}: {e}")
        return False
    if not is_domination_cover(g, final):
        logger.warning(
            f"Strategy rejected on {g.describe()}: final support "
            f"{final.support()} does not dominate"
        )
        return False
    return True
