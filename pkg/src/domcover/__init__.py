"""
domcover package root.
"""

__version__ = "0.1.0"

from .graphs import FamilySpec, Graph, build  # noqa: E402
from .pebbles import Configuration, Strategy  # noqa: E402
from .psi import psi_exact, psi_formula  # noqa: E402
from .search import Decision, SolverOptions, solvable  # noqa: E402

__all__ = [
    "Configuration",
    "Decision",
    "FamilySpec",
    "Graph",
    "SolverOptions",
    "Strategy",
    "build",
    "psi_exact",
    "psi_formula",
    "solvable",
]
