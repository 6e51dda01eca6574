from .gaussian import GaussianRational
from .quaternion import (
    Quaternion,
    SymplecticPair,
    conjugate,
    from_symplectic,
    inverse,
    mul,
    norm,
    quat_mobius,
    symplectic_mul,
    symplectic_split,
)

__all__ = [
    "GaussianRational",
    "Quaternion",
    "SymplecticPair",
    "mul",
    "conjugate",
    "norm",
    "inverse",
    "symplectic_split",
    "from_symplectic",
    "symplectic_mul",
    "quat_mobius",
]
