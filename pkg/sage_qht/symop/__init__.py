from .algebra import (
    AlgebraElement,
    ClosureResult,
    CommutatorTable,
    adjoint_rep,
    commutator_table,
    ideal_check,
    infinitesimal_element,
    is_closed,
    is_semisimple,
    is_subalgebra,
    jacobi_violations,
    killing_form,
    structure_constants,
)
from .catalog import basis, generator
from .operator import DiffOperator, apply, commutator
from .polynomial import Polynomial
from .reference import DiscrepancyReport, compare_tables, verify_against_reference

__all__ = [
    "Polynomial",
    "DiffOperator",
    "apply",
    "commutator",
    "basis",
    "generator",
    "AlgebraElement",
    "CommutatorTable",
    "ClosureResult",
    "commutator_table",
    "is_closed",
    "structure_constants",
    "adjoint_rep",
    "ideal_check",
    "is_subalgebra",
    "jacobi_violations",
    "killing_form",
    "is_semisimple",
    "infinitesimal_element",
    "DiscrepancyReport",
    "compare_tables",
    "verify_against_reference",
]
