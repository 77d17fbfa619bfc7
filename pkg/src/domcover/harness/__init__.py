"""
Harness package: verification sweeps, property suites and benchmarks.
"""

from .bench import BenchRow, run_bench
from .proptests import SUITES, SuiteResult, UnknownSuiteError, run_suite
from .verification import (
    FEASIBILITY,
    InfeasibleRangeError,
    VerificationReport,
    VerificationRow,
    VerifyMode,
    known_formula_gap,
    parse_range,
    verify_family,
)

__all__ = [
    "FEASIBILITY",
    "SUITES",
    "BenchRow",
    "InfeasibleRangeError",
    "SuiteResult",
    "UnknownSuiteError",
    "VerificationReport",
    "VerificationRow",
    "VerifyMode",
    "known_formula_gap",
    "parse_range",
    "run_bench",
    "run_suite",
    "verify_family",
]
