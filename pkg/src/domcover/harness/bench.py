"""
Benchmarks
Wall-clock timings for the solver on the certification configurations and
for exact psi on small family members.
"""

import logging
import time
from typing import List, Optional

from pydantic import BaseModel

from ..graphs.graph_core import FamilySpec, build
from ..psi.exact import ExactOptions, psi_exact
from ..psi.extremal import worst_configuration
from ..search.reach_solver import SolverOptions, solvable

logger = logging.getLogger(__name__)

CERTIFICATION_FAMILIES = ["btree:2", "btree:3", "path:7", "cycle:7", "wheel:6"]
EXACT_FAMILIES = ["path:5", "cycle:6", "wheel:5", "btree:2"]


class BenchRow(BaseModel):
    instance: str
    task: str
    outcome: str
    total: Optional[int] = None
    nodes: int
    seconds: float


def bench_certification(spec: FamilySpec, solver: SolverOptions) -> BenchRow:
    g = build(spec)
    config = worst_configuration(spec).config
    started = time.perf_counter()
    decision = solvable(g, config, solver)
    return BenchRow(
        instance=str(spec),
        task="certify",
        outcome=decision.outcome.value,
        total=config.total,
        nodes=decision.stats.nodes_expanded,
        seconds=time.perf_counter() - started,
    )


def bench_exact(spec: FamilySpec, opts: ExactOptions) -> BenchRow:
    g = build(spec)
    started = time.perf_counter()
    result = psi_exact(g, opts)
    return BenchRow(
        instance=str(spec),
        task="psi-exact",
        outcome=str(result.value) if result.value is not None else f"[{result.lower}, {result.upper}]",
        nodes=result.solver_nodes,
        seconds=time.perf_counter() - started,
    )


def run_bench(
    opts: Optional[ExactOptions] = None,
    certification: Optional[List[str]] = None,
    exact: Optional[List[str]] = None,
) -> List[BenchRow]:
    opts = opts or ExactOptions()
    rows = []
    for text in certification if certification is not None else CERTIFICATION_FAMILIES:
        rows.append(bench_certification(FamilySpec.parse(text), opts.solver))
        logger.info(f"bench {rows[-1].instance} certify: {rows[-1].seconds:.3f}s")
    for text in exact if exact is not None else EXACT_FAMILIES:
        rows.append(bench_exact(FamilySpec.parse(text), opts))
        logger.info(f"bench {rows[-1].instance} psi-exact: {rows[-1].seconds:.3f}s")
    return rows
