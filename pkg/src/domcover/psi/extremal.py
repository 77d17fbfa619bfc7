"""
Extremal (worst-case) configurations: unsolvable configurations with one
pebble fewer than the family's pebbling number. Running the solver on them
certifies the lower bound without enumerating every configuration.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Sequence

from ..graphs.graph_core import Family, FamilySpec, ParameterBoundError
from ..pebbles.pebble_state import Configuration
from .formulas import psi_btree, psi_cycle, psi_multipartite, psi_path, psi_wheel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WorstCase:
    """A worst configuration together with the pebbling number it witnesses.

    ``degenerate`` marks families with psi = 1, whose worst configuration is
    empty.
    """

    config: Configuration
    psi: int
    degenerate: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "config": self.config.to_dict(),
            "total": self.config.total,
            "psi": self.psi,
            "degenerate": self.degenerate,
        }


def path_worst(n: int) -> Configuration:
    if n < 3:
        raise ParameterBoundError(f"path worst case needs n >= 3, got {n}")
    return Configuration.from_sparse(n, {0: psi_path(n) - 1})


def cycle_worst(n: int) -> Configuration:
    if n < 3:
        raise ParameterBoundError(f"cycle worst case needs n >= 3, got {n}")
    return Configuration.from_sparse(n, {0: psi_cycle(n) - 1})


def wheel_worst(n: int) -> Configuration:
    """One pebble on each of the rim vertices 1..n-3 (hub is vertex 0)."""
    if n < 3:
        raise ParameterBoundError(f"wheel worst case needs n >= 3, got {n}")
    return Configuration.from_sparse(n + 1, {v: 1 for v in range(1, n - 2)})


def multipartite_worst(sizes: Sequence[int]) -> Configuration:
    """One pebble on all but one vertex of the largest class."""
    spec = FamilySpec(Family.MULTIPARTITE, tuple(sizes))
    s1 = spec.n
    if s1 < 3:
        raise ParameterBoundError(
            f"multipartite worst case needs a largest class of size >= 3, got {s1}; "
            f"use multipartite_pair_worst for s1 = 2"
        )
    return Configuration.from_sparse(spec.vertex_count, {v: 1 for v in range(s1 - 1)})


def multipartite_pair_worst(sizes: Sequence[int]) -> Configuration:
    """Unsolvable configuration for a largest class of size 2.

    Two pebbles on vertex 0 are stuck: whichever single vertex ends up
    holding a pebble leaves its classmate undominated. With a singleton class
    two pebbles suffice (move one onto the singleton), so there the worst
    case is a single pebble on vertex 0.
    """
    spec = FamilySpec(Family.MULTIPARTITE, tuple(sizes))
    if spec.n != 2 or len(spec.params) < 2:
        raise ParameterBoundError(
            f"pair worst case needs a largest class of size 2 and at least two classes, "
            f"got {list(spec.params)}"
        )
    pebbles = 1 if 1 in spec.params else 2
    return Configuration.from_sparse(spec.vertex_count, {0: pebbles})


def btree_worst(n: int) -> Configuration:
    """Bottom-row construction for the complete binary tree of height ``n``.

    Leaves sit at level-order ids ``2^n - 1 .. 2^(n+1) - 2``. One pebble goes
    on every even bottom-row position ``0, 2, ..., 2^n - 4`` (no two share a
    parent), the second-rightmost leaf stays empty and the rightmost leaf
    takes the remaining pebbles.
    """
    if n < 2:
        raise ParameterBoundError(f"binary tree worst case needs height >= 2, got {n}")
    first_leaf = 2**n - 1
    singles = {first_leaf + pos: 1 for pos in range(0, 2**n - 3, 2)}
    remainder = psi_btree(n).total - 1 - len(singles)
    singles[first_leaf + 2**n - 1] = remainder
    return Configuration.from_sparse(2 ** (n + 1) - 1, singles)


def worst_configuration(spec: FamilySpec) -> WorstCase:
    """Worst configuration for any family member, including the psi = 1 cases."""
    fam, n, size = spec.family, spec.n, spec.vertex_count

    if fam is Family.PATH:
        if n < 3:
            return WorstCase(Configuration.zeros(size), 1, degenerate=True)
        return WorstCase(path_worst(n), psi_path(n))
    if fam is Family.CYCLE:
        psi = psi_cycle(n)
        return WorstCase(cycle_worst(n), psi, degenerate=psi == 1)
    if fam is Family.WHEEL:
        psi = psi_wheel(n)
        return WorstCase(wheel_worst(n), psi, degenerate=psi == 1)
    if fam is Family.COMPLETE:
        return WorstCase(Configuration.zeros(size), 1, degenerate=True)
    if fam is Family.MULTIPARTITE:
        if len(spec.params) == 1 or n == 1:
            return WorstCase(Configuration.zeros(size), 1, degenerate=True)
        if n == 2:
            config = multipartite_pair_worst(spec.params)
            return WorstCase(config, config.total + 1)
        return WorstCase(multipartite_worst(spec.params), psi_multipartite(spec.params))

    # binary trees
    if n == 0:
        return WorstCase(Configuration.zeros(size), 1, degenerate=True)
    if n == 1:
        # B1 is the path on three vertices with the root in the middle
        return WorstCase(Configuration.from_sparse(size, {1: 1}), 2)
    return WorstCase(btree_worst(n), psi_btree(n).total)
