import logging

from sage_qht.helpers.exceptions import CoincidentPoints, TooManyCoincidences

from .extended import INFINITY, ExtendedComplex

logger = logging.getLogger(__name__)

ZERO = ExtendedComplex(0)
ONE = ExtendedComplex(1)


def _quotient(numerator, denominator):
    if denominator == 0:
        return INFINITY
    return ExtendedComplex(numerator / denominator)


def cross_ratio(z, z1, z2, z3):
    """
    ``(z - z1)(z2 - z3) / ((z - z3)(z2 - z1))`` on the extended plane.

    One coincidence among the four points is allowed and resolved by the
    limiting value; an infinite point drops its two factors.
    """
    points = [ExtendedComplex.coerce(p) for p in (z, z1, z2, z3)]
    if len(set(points)) < 3:
        raise TooManyCoincidences(f"Need at least three distinct points, got {points}.")
    z, z1, z2, z3 = points
    if len(set(points)) == 3:
        logger.debug("Cross-ratio of %s resolved by its coincident pair", points)
    elif any(point.is_infinite for point in points):
        logger.debug("Cross-ratio of %s drops the factors of infinity", points)

    if z == z1 or z2 == z3:
        return ZERO
    if z == z3 or z2 == z1:
        return INFINITY
    if z == z2 or z1 == z3:
        return ONE

    if z.is_infinite:
        return _quotient(z2.value - z3.value, z2.value - z1.value)
    if z1.is_infinite:
        return _quotient(z2.value - z3.value, z.value - z3.value)
    if z2.is_infinite:
        return _quotient(z.value - z1.value, z.value - z3.value)
    if z3.is_infinite:
        return _quotient(z.value - z1.value, z2.value - z1.value)
    return _quotient(
        (z.value - z1.value) * (z2.value - z3.value),
        (z.value - z3.value) * (z2.value - z1.value),
    )


def similarity_ratio(z, z1, z2):
    """``(z - z1) / (z - z2)``; invariant under ``z -> a z + b``."""
    z, z1, z2 = (ExtendedComplex.coerce(p) for p in (z, z1, z2))
    if z == z2:
        raise CoincidentPoints("z and z2 coincide.")
    if z == z1:
        return ZERO
    if z.is_infinite:
        return ONE
    if z1.is_infinite:
        return INFINITY
    if z2.is_infinite:
        return ZERO
    return _quotient(z.value - z1.value, z.value - z2.value)
