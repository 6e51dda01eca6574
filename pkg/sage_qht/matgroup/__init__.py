from .element import (
    GroupElement,
    SubgroupClassification,
    act,
    classify,
    compose,
    from_qht,
    invert,
    m_map,
    to_qht,
)
from .exponential import exp_algebra_element, exp_generator, exp_series
from .generators import algebra_generator, matrix_basis
from .tables import matrix_commutator_table, verify_matrix_table

__all__ = [
    "GroupElement",
    "SubgroupClassification",
    "algebra_generator",
    "matrix_basis",
    "exp_generator",
    "exp_series",
    "exp_algebra_element",
    "classify",
    "act",
    "m_map",
    "compose",
    "invert",
    "from_qht",
    "to_qht",
    "matrix_commutator_table",
    "verify_matrix_table",
]
