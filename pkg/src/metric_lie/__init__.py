"""Exact computations with metric Lie algebras over the rationals."""

from metric_lie.errors import InvariantViolation, MetricLieError, StructureError, UsageError
from metric_lie.forms import MetricLieAlgebra
from metric_lie.lie import LieAlgebra, from_structure_constants
from metric_lie.linalg import Matrix, Subspace, SymBilinearForm

__all__ = [
    "InvariantViolation",
    "LieAlgebra",
    "Matrix",
    "MetricLieAlgebra",
    "MetricLieError",
    "StructureError",
    "Subspace",
    "SymBilinearForm",
    "UsageError",
    "from_structure_constants",
]
