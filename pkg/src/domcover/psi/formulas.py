"""
Closed-form domination cover pebbling numbers for the six graph families.

All evaluation is exact integer arithmetic. Fractional closed forms are
rewritten so that every division is exact, and a remainder raises instead of
rounding.
"""

import logging
from dataclasses import asdict, dataclass
from typing import Any, Dict, Sequence

from ..graphs.graph_core import Family, FamilySpec, ParameterBoundError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathDecomposition:
    """``n - 2 = alpha + 3 * k`` with ``alpha`` in {0, 1, 2}."""

    n: int
    alpha: int
    k: int


@dataclass(frozen=True)
class BTreeTerms:
    """The four summands of the binary-tree formula.

    For heights 0 and 1 the value is a base case; it is carried in ``t1`` and
    ``base_case`` is set.
    """

    n: int
    t1: int
    t2: int
    t3: int
    t4: int
    gamma: int
    base_case: bool = False

    @property
    def total(self) -> int:
        return self.t1 + self.t2 + self.t3 + self.t4

    def to_dict(self) -> Dict[str, Any]:
        payload = asdict(self)
        payload["total"] = self.total
        return payload


def _exact_div(numerator: int, denominator: int) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(f"{numerator} is not divisible by {denominator}")
    return quotient


def decompose(n: int) -> PathDecomposition:
    if n < 2:
        raise ParameterBoundError(f"path decomposition needs n >= 2, got {n}")
    k, alpha = divmod(n - 2, 3)
    return PathDecomposition(n=n, alpha=alpha, k=k)


def psi_core(m: int) -> int:
    """Main path term 2^(m+1) * (1 - 8^-(k+1)) / 7, computed as (2^(m+1) - 2^alpha) / 7."""
    d = decompose(m)
    return _exact_div(2 ** (m + 1) - 2**d.alpha, 7)


def psi_path(n: int) -> int:
    if n < 1:
        raise ParameterBoundError(f"path needs n >= 1, got {n}")
    if n <= 2:
        return 1
    return psi_core(n) + decompose(n).alpha // 2


def psi_cycle(n: int) -> int:
    if n < 3:
        raise ParameterBoundError(f"cycle needs n >= 3, got {n}")
    if n % 2:
        m = (n + 1) // 2
        alpha = decompose(m).alpha
        phi1 = 2 * (alpha // 2) - abs(alpha - 1)
        return 2 * psi_core(m) + phi1

    # even n = 2m - 2
    m = (n + 2) // 2
    a, b = decompose(m).alpha, decompose(m - 1).alpha
    phi2 = a // 2 + b // 2 - abs(a - 1) * abs(b - 1)
    return psi_core(m) + psi_core(m - 1) + phi2


def psi_complete(n: int) -> int:
    if n < 1:
        raise ParameterBoundError(f"complete graph needs n >= 1, got {n}")
    return 1


def psi_multipartite(sizes: Sequence[int]) -> int:
    sizes = list(sizes)
    if len(sizes) < 2:
        raise ParameterBoundError(
            f"multipartite formula needs at least two classes, got {sizes}; "
            f"a single class is not connected and K_n is covered by psi_complete"
        )
    # validates sizes
    FamilySpec(Family.MULTIPARTITE, tuple(sizes))
    s1 = sizes[0]
    if s1 >= 3:
        return s1
    if s1 == 2:
        return 3
    return 1


def psi_wheel(n: int) -> int:
    if n < 3:
        raise ParameterBoundError(f"wheel needs n >= 3, got {n}")
    return n - 2


def psi_btree(n: int) -> BTreeTerms:
    if n < 0:
        raise ParameterBoundError(f"binary tree height must be >= 0, got {n}")
    if n <= 1:
        return BTreeTerms(n=n, t1=n + 1, t2=0, t3=0, t4=0, gamma=0, base_case=True)

    t1 = 2 ** (n - 1) - 1
    t2 = sum(
        2 ** (3 * i + 1)
        + sum(2 ** (j - 1) * 2 ** (3 * i + 2 * j + 1) for j in range(1, n - 3 * i - 1))
        for i in range((n - 1) // 3 + 1)
    )
    t3 = sum(2 ** (n - 3 * k + 1) * 2 ** (2 * n - 3 * k + 2) for k in range(1, (n + 1) // 3 + 1))
    gamma = 2 ** (n - 1) if n % 3 == 0 else 0
    return BTreeTerms(n=n, t1=t1, t2=t2, t3=t3, t4=gamma, gamma=gamma)


def psi_formula(spec: FamilySpec) -> int:
    """Dispatch to the family formula and return the value of psi."""
    fam = spec.family
    if fam is Family.PATH:
        return psi_path(spec.n)
    if fam is Family.CYCLE:
        return psi_cycle(spec.n)
    if fam is Family.COMPLETE:
        return psi_complete(spec.n)
    if fam is Family.MULTIPARTITE:
        return psi_multipartite(spec.params)
    if fam is Family.WHEEL:
        return psi_wheel(spec.n)
    return psi_btree(spec.n).total
