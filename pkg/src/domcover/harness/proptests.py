"""
Property Suites
Seeded, reproducible checks of the structural properties the exact machinery
relies on: monotonicity, witness soundness, pruning equivalence, the
single-vertex worst case on cycles and the formula identities.
"""

import logging
import random
import time
from typing import Callable, Dict, List, Tuple

from pydantic import BaseModel

from ..graphs.graph_core import Family, FamilySpec, Graph, build
from ..pebbles.pebble_state import Configuration
from ..psi.exact import enumerate_configs, max_unsolvable_single_vertex, psi_exact, sample_config
from ..psi.formulas import (
    psi_btree,
    psi_complete,
    psi_cycle,
    psi_multipartite,
    psi_path,
    psi_wheel,
)
from ..search.reach_solver import Outcome, SolverOptions, solvable, verify_strategy
from .verification import instances

logger = logging.getLogger(__name__)

DEFAULT_TRIALS = 1000
MAX_REPORTED_FAILURES = 20

BTREE_GOLDEN = [11, 81, 609, 4777, 38105, 304473, 2434969, 19478809, 155827481]


class UnknownSuiteError(ValueError):
    pass


class SuiteResult(BaseModel):
    suite: str
    passed: bool
    trials: int
    checked: int
    failures: List[str]
    seed: int
    seconds: float


_Outcome = Tuple[int, List[str]]


def small_family_graphs(max_vertices: int = 6) -> List[Graph]:
    """Every family graph with at most ``max_vertices`` vertices."""
    specs = [FamilySpec(Family.PATH, (n,)) for n in range(1, max_vertices + 1)]
    specs += [FamilySpec(Family.CYCLE, (n,)) for n in range(3, max_vertices + 1)]
    specs += [FamilySpec(Family.COMPLETE, (n,)) for n in range(1, max_vertices + 1)]
    specs += [FamilySpec(Family.WHEEL, (n,)) for n in range(3, max_vertices)]
    specs += [FamilySpec(Family.BTREE, (h,)) for h in range(0, 2)]
    specs += instances(Family.MULTIPARTITE, 2, max_vertices)
    return [build(spec) for spec in specs]


def _random_config(g: Graph, rng: random.Random, max_total: int) -> Configuration:
    return sample_config(g.n, rng.randint(0, max_total), rng)


def _record(failures: List[str], message: str) -> None:
    logger.warning(message)
    if len(failures) < MAX_REPORTED_FAILURES:
        failures.append(message)


# ────────────────────────────────────────────────────────────────────────────────
# Suites
# ────────────────────────────────────────────────────────────────────────────────


def monotonicity(trials: int, rng: random.Random) -> _Outcome:
    """Adding a pebble never turns a solvable configuration unsolvable.

    Exhaustive over every family graph with at most six vertices and totals
    up to six, then ``trials`` random checks on slightly larger totals.
    """
    checked = 0
    failures: List[str] = []
    graphs = small_family_graphs(6)
    for g in graphs:
        previous: Dict[Tuple[int, ...], bool] = {}
        for total in range(0, 7):
            current = {c.counts: solvable(g, c).solvable for c in enumerate_configs(g.n, total)}
            for counts, ok in previous.items():
                if not ok:
                    continue
                for v in range(g.n):
                    bigger = counts[:v] + (counts[v] + 1,) + counts[v + 1 :]
                    checked += 1
                    if not current[bigger]:
                        _record(failures, f"{g.describe()}: {list(counts)} solvable but +1 at {v} is not")
            previous = current

    for _ in range(trials):
        g = rng.choice(graphs)
        c = _random_config(g, rng, 10)
        if not solvable(g, c).solvable:
            continue
        v = rng.randrange(g.n)
        checked += 1
        if not solvable(g, c.with_added(v)).solvable:
            _record(failures, f"{g.describe()}: {list(c.counts)} solvable but +1 at {v} is not")
    return checked, failures


def witness_replay(trials: int, rng: random.Random) -> _Outcome:
    """Every solvable decision carries a witness that replays to a cover."""
    checked = 0
    failures: List[str] = []
    graphs = small_family_graphs(6) + [build(FamilySpec(Family.BTREE, (2,)))]
    plain = SolverOptions.unpruned()
    for _ in range(trials):
        g = rng.choice(graphs)
        c = _random_config(g, rng, 12)
        for opts in (None, plain):
            decision = solvable(g, c, opts)
            if decision.outcome is not Outcome.SOLVABLE:
                continue
            checked += 1
            if decision.witness is None or not verify_strategy(g, c, decision.witness):
                _record(failures, f"{g.describe()}: witness for {list(c.counts)} does not verify")
    return checked, failures


def pruning_equivalence(trials: int, rng: random.Random) -> _Outcome:
    """Plain search and fully pruned search agree on every configuration of
    at most eight pebbles on P5, C5, W4, B2 and K4."""
    checked = 0
    failures: List[str] = []
    specs = [
        FamilySpec(Family.PATH, (5,)),
        FamilySpec(Family.CYCLE, (5,)),
        FamilySpec(Family.WHEEL, (4,)),
        FamilySpec(Family.BTREE, (2,)),
        FamilySpec(Family.COMPLETE, (4,)),
    ]
    plain = SolverOptions.unpruned()
    for spec in specs:
        g = build(spec)
        for total in range(0, 9):
            for c in enumerate_configs(g.n, total):
                checked += 1
                expected = solvable(g, c, plain).outcome
                actual = solvable(g, c).outcome
                if expected is not actual:
                    _record(
                        failures,
                        f"{spec}: {list(c.counts)} plain={expected.value} pruned={actual.value}",
                    )
    return checked, failures


def single_vertex_worst_case(trials: int, rng: random.Random) -> _Outcome:
    """On C3..C7 stacking every pebble on one vertex is the worst case."""
    checked = 0
    failures: List[str] = []
    for n in range(3, 8):
        g = build(FamilySpec(Family.CYCLE, (n,)))
        _, k = max_unsolvable_single_vertex(g)
        psi = psi_exact(g).value
        checked += 1
        if psi is None or k + 1 != psi:
            _record(failures, f"cycle:{n}: single-vertex worst {k} + 1 != psi {psi}")
    return checked, failures


def formula_identities(trials: int, rng: random.Random) -> _Outcome:
    """Recurrences, cross-family coincidences and the binary-tree growth bounds."""
    checks: List[Tuple[bool, str]] = []
    for n in range(6, 41):
        diff = psi_path(n) - psi_path(n - 3)
        checks.append((diff == 2 ** (n - 2), f"path recurrence fails at n={n}: {diff}"))
    checks.append((psi_cycle(3) == psi_complete(3), "C3 and K3 disagree"))
    checks.append((psi_cycle(4) == psi_multipartite([2, 2]), "C4 and K2,2 disagree"))
    checks.append((psi_wheel(3) == psi_complete(4), "W3 and K4 disagree"))
    for n, expected in enumerate(BTREE_GOLDEN, start=2):
        total = psi_btree(n).total
        checks.append((total == expected, f"btree:{n} gives {total}, expected {expected}"))
    for n in range(3, 21):
        ratio_ok = psi_btree(n).total >= 6 * psi_btree(n - 1).total
        checks.append((ratio_ok, f"btree:{n} below six times btree:{n - 1}"))
        if n >= 8:
            ratio = psi_btree(n).total / psi_btree(n - 1).total
            checks.append((abs(ratio - 8) <= 0.08, f"btree:{n} growth ratio {ratio:.4f} not near 8"))

    failures: List[str] = []
    for ok, message in checks:
        if not ok:
            _record(failures, message)
    return len(checks), failures


SUITES: Dict[str, Callable[[int, random.Random], _Outcome]] = {
    "monotonicity": monotonicity,
    "witness-replay": witness_replay,
    "pruning-equivalence": pruning_equivalence,
    "single-vertex": single_vertex_worst_case,
    "formula-identities": formula_identities,
}


def run_suite(name: str, trials: int = DEFAULT_TRIALS, seed: int = 0) -> SuiteResult:
    """Run one named suite; deterministic for a given seed."""
    suite = SUITES.get(name)
    if suite is None:
        raise UnknownSuiteError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    started = time.perf_counter()
    checked, failures = suite(trials, random.Random(seed))
    seconds = time.perf_counter() - started
    logger.info(f"Suite {name}: {checked} checks, {len(failures)} failure(s) in {seconds:.2f}s")
    return SuiteResult(
        suite=name,
        passed=not failures,
        trials=trials,
        checked=checked,
        failures=failures,
        seed=seed,
        seconds=seconds,
    )
