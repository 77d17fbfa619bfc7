"""
Psi package: closed-form formulas, worst-case configurations and exact computation.
"""

from .exact import (
    DEFAULT_MAX_CONFIGS,
    DEFAULT_SAMPLE_TRIALS,
    BudgetExhaustedError,
    ExactOptions,
    PsiMethod,
    PsiResult,
    SamplingCertificate,
    count_configs,
    enumerate_configs,
    formula_result,
    max_unsolvable_single_vertex,
    psi_exact,
    sample_config,
)
from .extremal import (
    WorstCase,
    btree_worst,
    cycle_worst,
    multipartite_pair_worst,
    multipartite_worst,
    path_worst,
    wheel_worst,
    worst_configuration,
)
from .formulas import (
    BTreeTerms,
    PathDecomposition,
    decompose,
    psi_btree,
    psi_complete,
    psi_core,
    psi_cycle,
    psi_formula,
    psi_multipartite,
    psi_path,
    psi_wheel,
)

__all__ = [
    "DEFAULT_MAX_CONFIGS",
    "DEFAULT_SAMPLE_TRIALS",
    "BTreeTerms",
    "BudgetExhaustedError",
    "ExactOptions",
    "PathDecomposition",
    "PsiMethod",
    "PsiResult",
    "SamplingCertificate",
    "WorstCase",
    "btree_worst",
    "count_configs",
    "cycle_worst",
    "decompose",
    "enumerate_configs",
    "formula_result",
    "max_unsolvable_single_vertex",
    "multipartite_pair_worst",
    "multipartite_worst",
    "path_worst",
    "psi_btree",
    "psi_complete",
    "psi_core",
    "psi_cycle",
    "psi_exact",
    "psi_formula",
    "psi_multipartite",
    "psi_path",
    "psi_wheel",
    "sample_config",
    "wheel_worst",
    "worst_configuration",
]
