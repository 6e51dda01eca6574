from .classifier import HolomorphyVerdict, classify_holomorphy, sample_points
from .derivatives import (
    DerivativeEstimates,
    cr_residual,
    left_derivative_fd,
    partial_derivatives,
)
from .functions import AffineFunction, affine_eval

__all__ = [
    "AffineFunction",
    "affine_eval",
    "DerivativeEstimates",
    "HolomorphyVerdict",
    "partial_derivatives",
    "left_derivative_fd",
    "cr_residual",
    "classify_holomorphy",
    "sample_points",
]
