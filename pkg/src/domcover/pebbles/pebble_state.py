"""
Pebble State
Configurations, pebbling moves, strategies and the domination-cover goal.
"""

import json
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, Iterator, List, Mapping, Sequence, Tuple

from ..graphs.graph_core import Graph, is_dominating

logger = logging.getLogger(__name__)


class ConfigurationFormatError(ValueError):
    """Configuration or strategy text does not follow the documented format."""


class IllegalMoveError(ValueError):
    """A pebbling move cannot be applied to a configuration."""


class InsufficientPebblesError(IllegalMoveError):
    pass


class NonAdjacentMoveError(IllegalMoveError):
    pass


class ReplayError(ValueError):
    """A strategy failed during replay; ``index`` is the first illegal move."""

    def __init__(self, index: int, cause: IllegalMoveError):
        self.index = index
        self.cause = cause
        super().__init__(f"illegal move at index {index}: {cause}")


@dataclass(frozen=True, order=True)
class Configuration:
    """Dense pebble counts indexed by vertex id.

    Ordering compares counts lexicographically, which gives the canonical
    total order used for memo tables and reports. Use
    :meth:`is_pointwise_le` for the partial order of the pebbling game.
    """

    counts: Tuple[int, ...]

    def __post_init__(self) -> None:
        counts = tuple(int(c) for c in self.counts)
        if any(c < 0 for c in counts):
            raise ConfigurationFormatError(f"pebble counts must be >= 0, got {list(counts)}")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def zeros(cls, n: int) -> "Configuration":
        return cls((0,) * n)

    @classmethod
    def from_sparse(cls, n: int, pebbles: Mapping[int, int]) -> "Configuration":
        counts = [0] * n
        for v, k in pebbles.items():
            if not 0 <= v < n:
                raise ConfigurationFormatError(f"vertex {v} out of range 0..{n - 1}")
            counts[v] += k
        return cls(tuple(counts))

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, v: int) -> int:
        return self.counts[v]

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    @cached_property
    def total(self) -> int:
        return sum(self.counts)

    def support(self) -> List[int]:
        return [v for v, c in enumerate(self.counts) if c > 0]

    @cached_property
    def support_mask(self) -> int:
        return sum(1 << v for v, c in enumerate(self.counts) if c > 0)

    def is_pointwise_le(self, other: "Configuration") -> bool:
        return len(self) == len(other) and all(
            a <= b for a, b in zip(self.counts, other.counts)
        )

    def with_added(self, v: int, k: int = 1) -> "Configuration":
        counts = list(self.counts)
        counts[v] += k
        return Configuration(tuple(counts))

    def require_size(self, g: Graph) -> None:
        if len(self.counts) != g.n:
            raise ConfigurationFormatError(
                f"configuration has {len(self.counts)} entries, graph has {g.n} vertices"
            )

    # ── text formats ───────────────────────────────────────────────────────

    def to_dict(self) -> Dict[str, Any]:
        return {"counts": list(self.counts)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "Configuration":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as e:
            raise ConfigurationFormatError(f"invalid configuration JSON: {e}") from None
        if not isinstance(payload, dict) or not isinstance(payload.get("counts"), list):
            raise ConfigurationFormatError('configuration JSON must look like {"counts": [...]}')
        counts = payload["counts"]
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in counts):
            raise ConfigurationFormatError("configuration counts must be integers")
        return cls(tuple(counts))

    def to_compact(self) -> str:
        """``"v:count"`` pairs separated by commas; zero vertices omitted."""
        return ",".join(f"{v}:{c}" for v, c in enumerate(self.counts) if c)

    @classmethod
    def from_compact(cls, text: str, n: int) -> "Configuration":
        pebbles: Dict[int, int] = {}
        for item in text.split(","):
            item = item.strip()
            if not item:
                continue
            vertex, sep, count = item.partition(":")
            try:
                v, k = int(vertex), int(count)
            except ValueError:
                raise ConfigurationFormatError(f"expected 'v:count', got {item!r}") from None
            if not sep or k < 0:
                raise ConfigurationFormatError(f"expected 'v:count', got {item!r}")
            if v in pebbles:
                raise ConfigurationFormatError(f"vertex {v} listed twice")
            pebbles[v] = k
        return cls.from_sparse(n, pebbles)


@dataclass(frozen=True, order=True)
class PebblingMove:
    """Remove two pebbles from ``source`` and place one on ``target``."""

    source: int
    target: int

    def __post_init__(self) -> None:
        if self.source == self.target:
            raise IllegalMoveError(f"move endpoints coincide at vertex {self.source}")


@dataclass(frozen=True)
class Strategy:
    """Ordered pebbling moves; serves as a solvability certificate."""

    moves: Tuple[PebblingMove, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self) -> Iterator[PebblingMove]:
        return iter(self.moves)

    @classmethod
    def of(cls, pairs: Sequence[Sequence[int]]) -> "Strategy":
        return cls(tuple(PebblingMove(int(a), int(b)) for a, b in pairs))

    def to_dict(self) -> Dict[str, Any]:
        return {"moves": [[m.source, m.target] for m in self.moves]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "Strategy":
        try:
            payload = json.loads(text)
            pairs = payload["moves"]
            if any(len(p) != 2 for p in pairs):
                raise ValueError("each move is a [from, to] pair")
            return cls.of(pairs)
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
            raise ConfigurationFormatError(f"invalid strategy JSON: {e}") from None


def apply_move(c: Configuration, m: PebblingMove, g: Graph) -> Configuration:
    """Apply one pebbling move; the total drops by exactly one."""
    c.require_size(g)
    if not g.has_edge(m.source, m.target):
        raise NonAdjacentMoveError(f"{m.source} and {m.target} are not adjacent")
    if c.counts[m.source] < 2:
        raise InsufficientPebblesError(
            f"vertex {m.source} holds {c.counts[m.source]} pebble(s), a move needs 2"
        )
    counts = list(c.counts)
    counts[m.source] -= 2
    counts[m.target] += 1
    return Configuration(tuple(counts))


def is_domination_cover(g: Graph, c: Configuration) -> bool:
    c.require_size(g)
    return is_dominating(g, c.support())


def replay(g: Graph, start: Configuration, s: Strategy) -> Configuration:
    """Fold :func:`apply_move` over ``s``; fails at the first illegal move."""
    current = start
    for index, move in enumerate(s.moves):
        try:
            current = apply_move(current, move, g)
        except IllegalMoveError as e:
            raise ReplayError(index, e) from e
    return current


def weak_compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Every way to split ``total`` into ``parts`` nonnegative integers.

    Yields in lexicographically descending order, so ``(total, 0, ..., 0)``
    comes first.
    """
    if parts <= 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in weak_compositions(total - head, parts - 1):
            yield (head,) + tail
