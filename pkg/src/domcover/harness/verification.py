"""
Verification
Family sweeps that compare the closed-form formulas against the exact oracle
and certify the worst-case configurations.
"""

import dataclasses
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from typing import Dict, Iterator, List, Optional, Tuple

from pydantic import BaseModel

from ..graphs.graph_core import Family, FamilySpec, ParameterBoundError, build
from ..psi.exact import ExactOptions, PsiMethod, psi_exact
from ..psi.extremal import worst_configuration
from ..psi.formulas import psi_formula
from ..search.reach_solver import Outcome, solvable

logger = logging.getLogger(__name__)


class InfeasibleRangeError(ValueError):
    """A requested instance is beyond desk-scale exhaustive verification."""


class VerifyMode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"
    LOWER_BOUND_ONLY = "lower-bound-only"


# Desk-scale limits per family, derived from C(k + n - 1, n - 1) layer sizes.
# Multipartite limits refer to the total vertex count.
FEASIBILITY: Dict[Family, Dict[VerifyMode, Tuple[int, int]]] = {
    Family.PATH: {VerifyMode.EXHAUSTIVE: (1, 6), VerifyMode.SAMPLED: (7, 7)},
    Family.CYCLE: {VerifyMode.EXHAUSTIVE: (3, 7)},
    Family.WHEEL: {VerifyMode.EXHAUSTIVE: (3, 6)},
    Family.COMPLETE: {VerifyMode.EXHAUSTIVE: (1, 5)},
    Family.MULTIPARTITE: {VerifyMode.EXHAUSTIVE: (2, 6)},
    Family.BTREE: {
        VerifyMode.EXHAUSTIVE: (0, 2),
        VerifyMode.LOWER_BOUND_ONLY: (3, 3),
    },
}


class VerificationRow(BaseModel):
    instance: str
    formula: int
    exact: Optional[int] = None
    lower: Optional[int] = None
    upper: Optional[int] = None
    method: str
    agree: bool
    certified: bool
    worst_total: int
    witness_bad_config: Optional[List[int]] = None
    configs_tested: int = 0
    seconds_exact: float = 0.0
    seconds_certify: float = 0.0
    note: Optional[str] = None


class VerificationReport(BaseModel):
    version: str
    seed: int
    family: str
    range: str
    mode: VerifyMode
    rows: List[VerificationRow]
    passed: bool


def known_formula_gap(spec: FamilySpec) -> Optional[str]:
    """Instances where the closed form and exhaustive search are known to differ."""
    if spec.family is Family.CYCLE and spec.n == 6:
        return "six pebbles on one vertex of C6 reach the dominating pair {2, 5}; psi(C6) = 6"
    if (
        spec.family is Family.MULTIPARTITE
        and spec.n == 2
        and len(spec.params) >= 2
        and 1 in spec.params
    ):
        return "two pebbles on any vertex reach the singleton class, which dominates; psi = 2"
    return None


def parse_range(text: str) -> Tuple[int, int]:
    """``"3..7"`` or ``"5"`` to an inclusive ``(low, high)`` pair."""
    low, sep, high = text.strip().partition("..")
    try:
        bounds = (int(low), int(high)) if sep else (int(low), int(low))
    except ValueError:
        raise ParameterBoundError(f"cannot parse range {text!r} (expected e.g. '3..7')") from None
    if bounds[0] > bounds[1]:
        raise ParameterBoundError(f"empty range {text!r}")
    return bounds


def _partitions(total: int, largest: int) -> Iterator[Tuple[int, ...]]:
    """Partitions of ``total`` into nonincreasing parts no larger than ``largest``."""
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def instances(family: Family, low: int, high: int) -> List[FamilySpec]:
    """Family members in the range, ordered by parameter."""
    if family is Family.MULTIPARTITE:
        return [
            FamilySpec(family, sizes)
            for total in range(max(low, 2), high + 1)
            for sizes in _partitions(total, total)
            if len(sizes) >= 2
        ]
    return [FamilySpec(family, (n,)) for n in range(low, high + 1)]


def _size_key(spec: FamilySpec) -> int:
    return sum(spec.params) if spec.family is Family.MULTIPARTITE else spec.n


def check_feasible(spec: FamilySpec, mode: VerifyMode) -> None:
    table = FEASIBILITY[spec.family]
    size = _size_key(spec)

    def within(m: VerifyMode) -> bool:
        return m in table and table[m][0] <= size <= table[m][1]

    if mode is VerifyMode.EXHAUSTIVE and not within(VerifyMode.EXHAUSTIVE):
        raise InfeasibleRangeError(
            f"{spec} is outside the exhaustive range "
            f"{table[VerifyMode.EXHAUSTIVE][0]}..{table[VerifyMode.EXHAUSTIVE][1]} "
            f"for {spec.family.value}; rerun with --sample or --lower-bound-only"
        )
    if mode is VerifyMode.SAMPLED and not (within(VerifyMode.EXHAUSTIVE) or within(VerifyMode.SAMPLED)):
        raise InfeasibleRangeError(
            f"{spec} is too large even for sampling; rerun with --lower-bound-only"
        )


def verify_instance(spec: FamilySpec, mode: VerifyMode, opts: ExactOptions) -> VerificationRow:
    """Formula, oracle and worst-case certification for one family member."""
    g = build(spec)
    formula = psi_formula(spec)

    started = time.perf_counter()
    worst = worst_configuration(spec)
    decision = solvable(g, worst.config, opts.solver)
    certified = decision.outcome is Outcome.UNSOLVABLE
    seconds_certify = time.perf_counter() - started

    row = dict(
        instance=str(spec),
        formula=formula,
        certified=certified,
        worst_total=worst.config.total,
        seconds_certify=seconds_certify,
        note=known_formula_gap(spec),
    )

    if mode is VerifyMode.LOWER_BOUND_ONLY:
        return VerificationRow(
            **row,
            lower=worst.config.total + 1 if certified else None,
            method="lower-bound",
            agree=certified and worst.config.total + 1 == formula,
        )

    if mode is VerifyMode.SAMPLED:
        opts = dataclasses.replace(opts, max_configs=0)
    started = time.perf_counter()
    result = psi_exact(g, opts)
    seconds_exact = time.perf_counter() - started

    if result.method is PsiMethod.EXHAUSTIVE and result.value is not None:
        agree = result.value == formula
    else:
        agree = result.lower == formula and result.upper == formula
    if not agree:
        logger.warning(
            f"{spec}: formula gives {formula}, oracle gives "
            f"{result.value if result.value is not None else f'[{result.lower}, {result.upper}]'}"
        )
    return VerificationRow(
        **row,
        exact=result.value,
        lower=result.lower,
        upper=result.upper,
        method=result.method.value,
        agree=agree,
        witness_bad_config=result.witness_bad_config,
        configs_tested=result.configs_tested,
        seconds_exact=seconds_exact,
    )


def verify_family(
    family: Family,
    low: int,
    high: int,
    mode: VerifyMode = VerifyMode.EXHAUSTIVE,
    opts: Optional[ExactOptions] = None,
    threads: int = 1,
    version: str = "",
) -> VerificationReport:
    """Verify every family member in ``low..high``; rows keep parameter order."""
    opts = opts or ExactOptions()
    specs = instances(family, low, high)
    if not specs:
        raise ParameterBoundError(f"no {family.value} instances in range {low}..{high}")
    for spec in specs:
        check_feasible(spec, mode)

    logger.info(f"Verifying {len(specs)} {family.value} instance(s) in {mode.value} mode")
    if threads > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(
                pool.map(verify_instance, specs, [mode] * len(specs), [opts] * len(specs))
            )
    else:
        rows = [verify_instance(spec, mode, opts) for spec in specs]

    return VerificationReport(
        version=version,
        seed=opts.seed,
        family=family.value,
        range=f"{low}..{high}",
        mode=mode,
        rows=rows,
        passed=all(r.agree and r.certified for r in rows),
    )
