from .extended import INFINITY, ExtendedComplex
from .mobius import (
    MobiusParams,
    mobius_apply,
    mobius_between,
    mobius_compose,
    mobius_from_three_points,
    mobius_inverse,
)
from .ratios import cross_ratio, similarity_ratio

__all__ = [
    "ExtendedComplex",
    "INFINITY",
    "MobiusParams",
    "mobius_apply",
    "mobius_compose",
    "mobius_inverse",
    "mobius_from_three_points",
    "mobius_between",
    "cross_ratio",
    "similarity_ratio",
]
