"""Mechanized case analysis of cohomogeneity one actions on positively curved 7-manifolds."""

from .classifier import ClassificationReport, enumerate_cases, evaluate_case, run_classification
from .lie_core import CompactAlgebra, algebra, enumerate_algebras
from .rep_calc import Su2Rep, TorusRep, V

__all__ = [
    "ClassificationReport",
    "CompactAlgebra",
    "Su2Rep",
    "TorusRep",
    "V",
    "algebra",
    "enumerate_algebras",
    "enumerate_cases",
    "evaluate_case",
    "run_classification",
]
__version__ = "0.1.0"
