"""
Graph Core
Connected simple graphs, generators for the six pebbling families, domination
predicates and the edge-list / DOT text formats.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

logger = logging.getLogger(__name__)


class GraphError(ValueError):
    """Base class for invalid graph input."""


class ParameterBoundError(GraphError):
    """A family parameter lies outside its supported range."""


class VertexRangeError(GraphError):
    """A vertex id does not belong to the graph."""


class DisconnectedGraphError(GraphError):
    """The pebbling game is only defined on connected graphs."""


class EdgeListError(GraphError):
    """Edge-list text could not be turned into a graph."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class MalformedLineError(EdgeListError):
    pass


class SelfLoopError(EdgeListError):
    pass


class DuplicateEdgeError(EdgeListError):
    pass


class Family(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    MULTIPARTITE = "multipartite"
    WHEEL = "wheel"
    BTREE = "btree"


# Accepted spellings on the command line
FAMILY_ALIASES: Dict[str, Family] = {
    "path": Family.PATH,
    "cycle": Family.CYCLE,
    "complete": Family.COMPLETE,
    "multipartite": Family.MULTIPARTITE,
    "kpart": Family.MULTIPARTITE,
    "wheel": Family.WHEEL,
    "btree": Family.BTREE,
    "binarytree": Family.BTREE,
}


@dataclass(frozen=True)
class FamilySpec:
    """Symbolic description of one member of a graph family.

    ``params`` holds ``(n,)`` for paths, cycles, complete graphs and wheels,
    ``(height,)`` for binary trees and the nonincreasing class sizes for
    complete multipartite graphs.
    """

    family: Family
    params: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        self._check_bounds()

    def _check_bounds(self) -> None:
        fam, params = self.family, self.params
        if fam is Family.MULTIPARTITE:
            if len(params) < 1 or any(s < 1 for s in params):
                raise ParameterBoundError(
                    f"multipartite class sizes must all be >= 1, got {list(params)}"
                )
            if any(a < b for a, b in zip(params, params[1:])):
                raise ParameterBoundError(
                    f"multipartite class sizes must be nonincreasing, got {list(params)}"
                )
            return

        if len(params) != 1:
            raise ParameterBoundError(
                f"{fam.value} takes exactly one parameter, got {list(params)}"
            )
        minimum = {
            Family.PATH: 1,
            Family.CYCLE: 3,
            Family.COMPLETE: 1,
            Family.WHEEL: 3,
            Family.BTREE: 0,
        }[fam]
        if params[0] < minimum:
            raise ParameterBoundError(
                f"{fam.value} parameter must be >= {minimum}, got {params[0]}"
            )

    @property
    def n(self) -> int:
        """The family parameter (first class size for multipartite graphs)."""
        return self.params[0]

    @property
    def vertex_count(self) -> int:
        fam, n = self.family, self.n
        if fam is Family.MULTIPARTITE:
            return sum(self.params)
        if fam is Family.WHEEL:
            return n + 1
        if fam is Family.BTREE:
            return 2 ** (n + 1) - 1
        return n

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``"path:6"``, ``"btree:2"``, ``"multipartite:3,2"`` and friends."""
        name, sep, rest = text.strip().partition(":")
        family = FAMILY_ALIASES.get(name.strip().lower())
        if family is None or not sep:
            raise ParameterBoundError(
                f"cannot parse family spec {text!r} "
                f"(expected e.g. 'path:6' or 'multipartite:3,2')"
            )
        try:
            params = tuple(int(p) for p in rest.split(",") if p.strip())
        except ValueError:
            raise ParameterBoundError(f"non-integer parameter in {text!r}") from None
        return cls(family, params)

    def __str__(self) -> str:
        return f"{self.family.value}:{','.join(str(p) for p in self.params)}"


@dataclass(frozen=True)
class Graph:
    """Immutable connected simple graph on vertices ``0..n-1``.

    Build instances through :meth:`from_edges`, :func:`build` or
    :func:`parse_edge_list`; those validate the structure. The adjacency
    lists are sorted, which fixes the move-expansion order of the solver.
    """

    n: int
    adjacency: Tuple[Tuple[int, ...], ...]
    labels: Tuple[str, ...] = ()
    family: Optional[FamilySpec] = None

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.n:
            raise GraphError(
                f"adjacency has {len(self.adjacency)} rows for {self.n} vertices"
            )
        if self.labels and len(self.labels) != self.n:
            raise GraphError(f"expected {self.n} labels, got {len(self.labels)}")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"neighbors of {v} must be sorted and distinct")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise VertexRangeError(f"vertex {u} out of range 0..{self.n - 1}")
                if u == v:
                    raise SelfLoopError(f"self-loop at vertex {v}")
                if v not in self.adjacency[u]:
                    raise GraphError(f"adjacency is not symmetric for edge {v}-{u}")
        if self.n > 1 and not nx.is_connected(self.to_networkx()):
            raise DisconnectedGraphError(
                f"graph with {self.n} vertices is not connected"
            )

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
        family: Optional[FamilySpec] = None,
    ) -> "Graph":
        neighbors: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge {u}-{v} leaves the range 0..{n - 1}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if v in neighbors[u]:
                raise DuplicateEdgeError(f"duplicate edge {min(u, v)}-{max(u, v)}")
            neighbors[u].add(v)
            neighbors[v].add(u)
        return cls(
            n=n,
            adjacency=tuple(tuple(sorted(s)) for s in neighbors),
            labels=tuple(labels) if labels else (),
            family=family,
        )

    # ── structure ──────────────────────────────────────────────────────────

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adjacency[u]

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else ""

    @cached_property
    def closed_masks(self) -> Tuple[int, ...]:
        """Closed neighbourhood of each vertex as a bitmask."""
        return tuple(
            (1 << v) | sum(1 << u for u in nbrs)
            for v, nbrs in enumerate(self.adjacency)
        )

    def closed_neighborhood(self, v: int) -> FrozenSet[int]:
        return frozenset(u for u in range(self.n) if self.closed_masks[v] >> u & 1)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def dominates_mask(self, mask: int) -> bool:
        """True iff the vertex set encoded by ``mask`` dominates the graph."""
        covered = 0
        v = 0
        while mask:
            if mask & 1:
                covered |= self.closed_masks[v]
            mask >>= 1
            v += 1
        return covered == self.full_mask

    @cached_property
    def distances(self) -> np.ndarray:
        matrix = np.zeros((self.n, self.n), dtype=np.int64)
        for source, lengths in nx.all_pairs_shortest_path_length(self.to_networkx()):
            for target, hops in lengths.items():
                matrix[source, target] = hops
        matrix.setflags(write=False)
        return matrix

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(
            (u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v
        )
        return g

    def describe(self) -> str:
        if self.family is not None:
            return str(self.family)
        return f"graph:n={self.n},m={self.edge_count}"


# ────────────────────────────────────────────────────────────────────────────────
# Family generators
# ────────────────────────────────────────────────────────────────────────────────


def build(spec: FamilySpec) -> Graph:
    """Return the canonical graph for ``spec``.

    Vertex numbering:
      * path / cycle: 0..n-1 in path or cycle order
      * wheel: hub is 0, rim is 1..n in cycle order
      * binary tree: root is 0, level order (children of v are 2v+1, 2v+2)
      * multipartite: classes in the given size order, vertices blocked by class
    """
    fam, n = spec.family, spec.n
    edges: List[Tuple[int, int]] = []
    labels: List[str]

    if fam is Family.PATH:
        edges = [(i, i + 1) for i in range(n - 1)]
        labels = ["end" if i in (0, n - 1) else "inner" for i in range(n)]
    elif fam is Family.CYCLE:
        edges = [(i, (i + 1) % n) for i in range(n)]
        labels = ["rim"] * n
    elif fam is Family.COMPLETE:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
        labels = [""] * n
    elif fam is Family.WHEEL:
        edges = [(0, i) for i in range(1, n + 1)]
        edges += [(i, i + 1) for i in range(1, n)] + [(n, 1)]
        labels = ["hub"] + ["rim"] * n
    elif fam is Family.BTREE:
        total = 2 ** (n + 1) - 1
        first_leaf = 2**n - 1
        edges = [(v, c) for v in range(first_leaf) for c in (2 * v + 1, 2 * v + 2)]
        labels = [
            "root" if v == 0 else "bottom-row" if v >= first_leaf else "internal"
            for v in range(total)
        ]
        return Graph.from_edges(total, edges, labels, spec)
    elif fam is Family.MULTIPARTITE:
        classes = multipartite_classes(spec.params)
        owner = {v: i for i, members in enumerate(classes) for v in members}
        total = sum(spec.params)
        edges = [
            (u, v)
            for u in range(total)
            for v in range(u + 1, total)
            if owner[u] != owner[v]
        ]
        labels = [f"class-{owner[v] + 1}" for v in range(total)]
        return Graph.from_edges(total, edges, labels, spec)
    else:  # pragma: no cover - enum is closed
        raise ParameterBoundError(f"unknown family {fam}")

    vertex_total = spec.vertex_count
    return Graph.from_edges(vertex_total, edges, labels, spec)


def multipartite_classes(sizes: Sequence[int]) -> List[range]:
    """Vertex ranges of each class, blocked in the given order."""
    classes = []
    start = 0
    for size in sizes:
        classes.append(range(start, start + size))
        start += size
    return classes


# ────────────────────────────────────────────────────────────────────────────────
# Domination
# ────────────────────────────────────────────────────────────────────────────────


def vertex_mask(g: Graph, vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise VertexRangeError(f"vertex {v} out of range 0..{g.n - 1}")
        mask |= 1 << v
    return mask


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    """True iff every vertex of ``g`` is in ``s`` or adjacent to a member of ``s``."""
    return g.dominates_mask(vertex_mask(g, s))


def distance_matrix(g: Graph) -> np.ndarray:
    """Hop distances between all vertex pairs (read-only int64 matrix)."""
    return g.distances


# ────────────────────────────────────────────────────────────────────────────────
# Text formats
# ────────────────────────────────────────────────────────────────────────────────


def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated ``u v`` pairs, one edge per line.

    Blank lines and ``#`` comments are ignored. Text without any edge is the
    single-vertex graph, the only connected graph with no edges.
    """
    edges: List[Tuple[int, int]] = []
    seen = set()
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise MalformedLineError(f"expected 'u v', got {raw.strip()!r}", line_number)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLineError(
                f"vertex ids must be integers, got {raw.strip()!r}", line_number
            ) from None
        if u < 0 or v < 0:
            raise MalformedLineError(f"vertex ids must be >= 0, got {raw.strip()!r}", line_number)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", line_number)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key[0]}-{key[1]}", line_number)
        seen.add(key)
        edges.append(key)

    n = 1 + max((v for edge in edges for v in edge), default=0)
    logger.debug(f"Parsed edge list: {n} vertices, {len(edges)} edges")
    return Graph.from_edges(n, edges)


def emit_edge_list(g: Graph) -> str:
    return "\n".join(f"{u} {v}" for u, v in g.edges())


def emit_dot(g: Graph) -> str:
    """Render ``g`` as an undirected DOT graph for inspection."""
    name = g.describe().replace('"', "'")
    lines = [f'graph "{name}" {{']
    for v in range(g.n):
        label = g.label(v)
        lines.append(f'  {v} [label="{v}\\n{label}"];' if label else f"  {v};")
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines)
