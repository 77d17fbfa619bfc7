"""
Exact Psi
Computes the domination cover pebbling number of small graphs by scanning
layers of configurations with the reach solver, and degrades to honestly
labelled bounds when a layer is too large to enumerate.
"""

import dataclasses
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from itertools import islice
from math import comb
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

from pydantic import BaseModel, model_validator

from ..graphs.graph_core import Family, FamilySpec, Graph
from ..pebbles.pebble_state import Configuration, weak_compositions
from ..search.dominance_store import DominanceStore
from ..search.reach_solver import Outcome, SolverOptions, solvable
from .extremal import worst_configuration
from .formulas import psi_btree, psi_formula

logger = logging.getLogger(__name__)

DEFAULT_MAX_CONFIGS = 10**7
DEFAULT_SAMPLE_TRIALS = 200
CHUNK_SIZE = 2048

# upward sampling rounds before giving up on an upper bound
MAX_SAMPLED_ROUNDS = 64


class BudgetExhaustedError(RuntimeError):
    """The solver answered UNKNOWN where an exact decision was required."""


class PsiMethod(str, Enum):
    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"
    FORMULA = "formula"


class SamplingCertificate(BaseModel):
    """How the statistical upper evidence was obtained."""

    k: int
    trials: int
    seed: int
    solvable: int


class PsiResult(BaseModel):
    graph: str
    method: PsiMethod
    value: Optional[int] = None
    lower: int
    upper: Optional[int] = None
    witness_bad_config: Optional[List[int]] = None
    configs_tested: int = 0
    solver_nodes: int = 0
    sampling: Optional[SamplingCertificate] = None
    budget_limited: bool = False
    upper_is_statistical: bool = False
    terms: Optional[Dict[str, Any]] = None

    @model_validator(mode="after")
    def check_bounds(self) -> "PsiResult":
        if self.upper is not None and self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")
        if self.value is not None and not (self.lower <= self.value <= (self.upper or self.value)):
            raise ValueError(f"value {self.value} lies outside [{self.lower}, {self.upper}]")
        return self


@dataclasses.dataclass
class ExactOptions:
    """Tunables for :func:`psi_exact`.

    ``hint`` defaults to the family formula when the graph carries family
    metadata. ``workers > 1`` spreads each layer over a process pool.
    """

    hint: Optional[int] = None
    max_configs: int = DEFAULT_MAX_CONFIGS
    sample_trials: int = DEFAULT_SAMPLE_TRIALS
    seed: int = 0
    workers: int = 1
    symmetry: bool = True
    solver: SolverOptions = dataclasses.field(default_factory=SolverOptions)


# ────────────────────────────────────────────────────────────────────────────────
# Configuration streams
# ────────────────────────────────────────────────────────────────────────────────


def enumerate_configs(n: int, k: int) -> Iterator[Configuration]:
    """Every configuration of ``k`` pebbles on ``n`` vertices, lexicographically descending."""
    if n < 1 or k < 0:
        raise ValueError(f"need n >= 1 and k >= 0, got n={n}, k={k}")
    for counts in weak_compositions(k, n):
        yield Configuration(counts)


def count_configs(n: int, k: int) -> int:
    return comb(k + n - 1, n - 1)


def sample_config(n: int, k: int, rng: random.Random) -> Configuration:
    """Uniform draw from the weak compositions of ``k`` into ``n`` parts.

    Stars and bars: choose ``n - 1`` bar slots among ``k + n - 1`` and read off
    the gaps between consecutive bars.
    """
    bars = sorted(rng.sample(range(k + n - 1), n - 1))
    counts = []
    previous = -1
    for bar in bars:
        counts.append(bar - previous - 1)
        previous = bar
    counts.append(k + n - 2 - previous)
    return Configuration(tuple(counts))


def _is_canonical(g: Graph, counts: Tuple[int, ...]) -> bool:
    """Orbit representative test for the families with cheap symmetry.

    The representative is the lexicographically smallest member of its orbit.
    """
    fam = g.family.family if g.family is not None else None
    if fam is Family.CYCLE:
        return counts == min(counts[i:] + counts[:i] for i in range(len(counts)))
    if fam is Family.COMPLETE:
        return all(a <= b for a, b in zip(counts, counts[1:]))
    return True


def has_symmetry_reduction(g: Graph) -> bool:
    return g.family is not None and g.family.family in (Family.CYCLE, Family.COMPLETE)


# ────────────────────────────────────────────────────────────────────────────────
# Layer scanning
# ────────────────────────────────────────────────────────────────────────────────


@dataclasses.dataclass
class LayerScan:
    k: int
    tested: int = 0
    nodes: int = 0
    unknown: int = 0
    witness: Optional[Configuration] = None

    @property
    def all_solvable(self) -> bool:
        return self.witness is None and self.unknown == 0


def _solve_chunk(
    g: Graph, chunk: List[Tuple[int, ...]], options: SolverOptions, exhaustive: bool
) -> Tuple[int, int, int, Optional[int]]:
    """Worker body: (tested, nodes, unknown, index of an unsolvable entry or None).

    The index is the first unsolvable entry, or the last one when ``exhaustive``.
    """
    store = DominanceStore(2 * g.n, options.dominance_cap) if options.prune_dominance else None
    options = dataclasses.replace(options, shared_store=store)
    nodes = unknown = 0
    bad: Optional[int] = None
    for index, counts in enumerate(chunk):
        decision = solvable(g, Configuration(counts), options)
        nodes += decision.stats.nodes_expanded
        if decision.outcome is Outcome.UNSOLVABLE:
            bad = index
            if not exhaustive:
                return index + 1, nodes, unknown, bad
        elif decision.outcome is Outcome.UNKNOWN:
            unknown += 1
    return len(chunk), nodes, unknown, bad


def _chunks(configs: Iterable[Configuration], size: int) -> Iterator[List[Tuple[int, ...]]]:
    it = iter(configs)
    while True:
        chunk = [c.counts for c in islice(it, size)]
        if not chunk:
            return
        yield chunk


def scan_configs(
    g: Graph,
    configs: Iterable[Configuration],
    k: int,
    opts: ExactOptions,
    exhaustive: bool = False,
) -> LayerScan:
    """Decide the configurations of the stream.

    By default the scan stops at the first unsolvable configuration. With
    ``exhaustive`` every configuration is decided and the witness is the last
    unsolvable one; layer streams are lexicographically descending, so that
    is the lexicographically smallest counterexample. Sequential and pooled
    scans pick the same witness.
    """
    scan = LayerScan(k=k)
    solver = dataclasses.replace(opts.solver, shared_store=None)

    if opts.workers <= 1:
        if solver.prune_dominance:
            solver.shared_store = DominanceStore(2 * g.n, solver.dominance_cap)
        for config in configs:
            decision = solvable(g, config, solver)
            scan.tested += 1
            scan.nodes += decision.stats.nodes_expanded
            if decision.outcome is Outcome.UNSOLVABLE:
                scan.witness = config
                if not exhaustive:
                    return scan
            elif decision.outcome is Outcome.UNKNOWN:
                scan.unknown += 1
        return scan

    chunks = _chunks(configs, CHUNK_SIZE)
    with ProcessPoolExecutor(max_workers=opts.workers) as pool:
        while True:
            wave = list(islice(chunks, 4 * opts.workers))
            if not wave:
                return scan
            results = pool.map(
                _solve_chunk,
                [g] * len(wave),
                wave,
                [solver] * len(wave),
                [exhaustive] * len(wave),
            )
            # results arrive in submission order, which keeps the merge deterministic
            for chunk, (tested, nodes, unknown, bad) in zip(wave, results):
                scan.tested += tested
                scan.nodes += nodes
                scan.unknown += unknown
                if bad is not None:
                    scan.witness = Configuration(chunk[bad])
                    if not exhaustive:
                        return scan


def scan_layer(g: Graph, k: int, opts: ExactOptions, exhaustive: bool = False) -> LayerScan:
    configs: Iterable[Configuration] = enumerate_configs(g.n, k)
    if opts.symmetry and has_symmetry_reduction(g):
        configs = (c for c in configs if _is_canonical(g, c.counts))
    scan = scan_configs(g, configs, k, opts, exhaustive)
    logger.info(
        f"Layer k={k} on {g.describe()}: {scan.tested} tested, "
        f"{'all solvable' if scan.all_solvable else 'counterexample' if scan.witness else 'undecided'}"
    )
    return scan


def sample_layer(g: Graph, k: int, opts: ExactOptions) -> LayerScan:
    rng = random.Random(f"{opts.seed}-{k}")
    configs = [sample_config(g.n, k, rng) for _ in range(opts.sample_trials)]
    return scan_configs(g, configs, k, opts)


# ────────────────────────────────────────────────────────────────────────────────
# psi
# ────────────────────────────────────────────────────────────────────────────────


def default_hint(g: Graph) -> int:
    if g.family is None:
        return 1
    try:
        return max(1, psi_formula(g.family))
    except ValueError:
        return 1


def psi_exact(g: Graph, opts: Optional[ExactOptions] = None) -> PsiResult:
    """Smallest k such that every k-pebble configuration on ``g`` is solvable.

    Scans from the hint: downward while whole layers are solvable, upward
    while they are not. Solvability is monotone, so the first solvable layer
    above an unsolvable one is exact. The layer of size psi - 1 is always
    enumerated in full and the witness is its lexicographically smallest
    unsolvable configuration. Layers larger than ``max_configs`` are sampled
    instead and the result turns into bounds.
    """
    opts = opts or ExactOptions()
    k = opts.hint if opts.hint is not None else default_hint(g)
    k = max(1, k)
    tested = nodes = 0
    lower = 1
    witness: Optional[Configuration] = Configuration.zeros(g.n)

    def feasible(layer: int) -> bool:
        return count_configs(g.n, layer) <= opts.max_configs

    if not feasible(k):
        return _psi_sampled(g, k, lower, opts, tested, nodes)

    scan = scan_layer(g, k, opts)
    tested, nodes = scan.tested, scan.nodes
    if scan.unknown and scan.witness is None:
        return _budget_result(g, lower, tested, nodes)

    if scan.all_solvable:
        upper = k
        while k > 1:
            below = scan_layer(g, k - 1, opts, exhaustive=True)
            tested += below.tested
            nodes += below.nodes
            if below.witness is not None:
                witness = below.witness
                break
            if below.unknown:
                return _budget_result(g, lower, tested, nodes, upper=upper)
            k -= 1
            upper = k
        value = k
    else:
        witness = scan.witness
        while True:
            lower = k + 1
            k += 1
            if not feasible(k):
                return _psi_sampled(g, k, lower, opts, tested, nodes, witness)
            above = scan_layer(g, k, opts)
            tested += above.tested
            nodes += above.nodes
            if above.witness is not None:
                witness = above.witness
                continue
            if above.unknown:
                return _budget_result(g, lower, tested, nodes, witness=witness)
            break
        value = k
        # the layer below was only scanned up to its first counterexample
        final = scan_layer(g, value - 1, opts, exhaustive=True)
        tested += final.tested
        nodes += final.nodes
        if final.witness is not None:
            witness = final.witness

    logger.info(f"psi({g.describe()}) = {value} after {tested} configurations")
    return PsiResult(
        graph=g.describe(),
        method=PsiMethod.EXHAUSTIVE,
        value=value,
        lower=value,
        upper=value,
        witness_bad_config=list(witness.counts) if witness is not None else None,
        configs_tested=tested,
        solver_nodes=nodes,
    )


def _budget_result(
    g: Graph,
    lower: int,
    tested: int,
    nodes: int,
    upper: Optional[int] = None,
    witness: Optional[Configuration] = None,
) -> PsiResult:
    logger.warning(f"Solver budget exhausted while computing psi({g.describe()})")
    return PsiResult(
        graph=g.describe(),
        method=PsiMethod.EXHAUSTIVE,
        lower=lower,
        upper=upper,
        witness_bad_config=list(witness.counts) if witness is not None else None,
        configs_tested=tested,
        solver_nodes=nodes,
        budget_limited=True,
    )


def _psi_sampled(
    g: Graph,
    k: int,
    lower: int,
    opts: ExactOptions,
    tested: int,
    nodes: int,
    witness: Optional[Configuration] = None,
) -> PsiResult:
    """Bounds mode: certified lower bound plus statistical upper evidence."""
    logger.warning(
        f"Layer k={k} on {g.describe()} has {count_configs(g.n, k)} configurations, "
        f"above max_configs={opts.max_configs}; switching to sampling"
    )

    if g.family is not None:
        worst = worst_configuration(g.family)
        if worst.config.total + 1 > lower:
            decision = solvable(g, worst.config, opts.solver)
            nodes += decision.stats.nodes_expanded
            tested += 1
            if decision.outcome is Outcome.UNSOLVABLE:
                lower = worst.config.total + 1
                witness = worst.config
                logger.info(f"Certified lower bound {lower} from the worst configuration")
    k = max(k, lower)

    certificate: Optional[SamplingCertificate] = None
    upper: Optional[int] = None
    budget_limited = False
    for _ in range(MAX_SAMPLED_ROUNDS):
        scan = sample_layer(g, k, opts)
        tested += scan.tested
        nodes += scan.nodes
        if scan.witness is not None:
            lower, witness = k + 1, scan.witness
            k += 1
            continue
        budget_limited = scan.unknown > 0
        certificate = SamplingCertificate(
            k=k, trials=opts.sample_trials, seed=opts.seed, solvable=scan.tested - scan.unknown
        )
        if not budget_limited:
            upper = k
        break

    return PsiResult(
        graph=g.describe(),
        method=PsiMethod.SAMPLED,
        lower=lower,
        upper=upper,
        witness_bad_config=list(witness.counts) if witness is not None else None,
        configs_tested=tested,
        solver_nodes=nodes,
        sampling=certificate,
        budget_limited=budget_limited,
        upper_is_statistical=upper is not None,
    )


def formula_result(spec: FamilySpec) -> PsiResult:
    value = psi_formula(spec)
    terms = psi_btree(spec.n).to_dict() if spec.family is Family.BTREE else None
    return PsiResult(
        graph=str(spec),
        method=PsiMethod.FORMULA,
        value=value,
        lower=value,
        upper=value,
        terms=terms,
    )


def max_unsolvable_single_vertex(
    g: Graph, opts: Optional[SolverOptions] = None
) -> Tuple[int, int]:
    """Largest k such that k pebbles stacked on one vertex are unsolvable.

    Returns ``(vertex, k)`` for the maximizing vertex; ties go to the lowest
    id. Per vertex the boundary is found by doubling and binary search.
    """
    opts = opts or SolverOptions()

    def stuck(v: int, k: int) -> bool:
        decision = solvable(g, Configuration.from_sparse(g.n, {v: k}), opts)
        if decision.outcome is Outcome.UNKNOWN:
            raise BudgetExhaustedError(
                f"solver budget exhausted on {k} pebbles at vertex {v} of {g.describe()}"
            )
        return not decision.solvable

    best_vertex, best_k = 0, -1
    for v in range(g.n):
        lo, hi = 0, 1
        while stuck(v, hi):
            lo, hi = hi, 2 * hi
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if stuck(v, mid):
                lo = mid
            else:
                hi = mid
        logger.debug(f"Vertex {v} of {g.describe()}: {lo} stacked pebbles unsolvable")
        if lo > best_k:
            best_vertex, best_k = v, lo
    return best_vertex, best_k

