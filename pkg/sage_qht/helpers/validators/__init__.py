from .expression import QuaternionExpressionValidator, parse_expression
from .payload import (
    load_json,
    parse_complex,
    parse_matrix,
    parse_quaternion,
    parse_real,
    parse_scalar,
    parse_transform,
)

__all__ = [
    "QuaternionExpressionValidator",
    "parse_expression",
    "load_json",
    "parse_scalar",
    "parse_real",
    "parse_quaternion",
    "parse_transform",
    "parse_complex",
    "parse_matrix",
]
