from .transform import (
    FixedPointResult,
    QhtTransform,
    SimilarityDecomposition,
    apply,
    compose,
    decompose,
    difference_factor,
    fixed_points,
    inverse,
    three_point_ratio,
)

__all__ = [
    "QhtTransform",
    "FixedPointResult",
    "SimilarityDecomposition",
    "apply",
    "compose",
    "inverse",
    "fixed_points",
    "decompose",
    "three_point_ratio",
    "difference_factor",
]
