import logging
import math

import numpy as np

from sage_qht.helpers.choices import MatrixCatalog
from sage_qht.helpers.exceptions import UnknownIndex
from sage_qht.utils.config import get_setting

from .element import GroupElement
from .generators import algebra_generator

logger = logging.getLogger(__name__)

_MAX_TERMS = 64


def exp_generator(i, t):
    """``exp(t x_i)`` in closed form."""
    if i in (1, 3, 4, 6):
        factor = t
    elif i in (2, 5):
        factor = 1 - math.exp(-t)
    else:
        raise UnknownIndex(f"XHAT has generators 1..6, got {i!r}.")
    matrix = np.eye(3, dtype=complex) + factor * algebra_generator(MatrixCatalog.XHAT, i)
    return GroupElement.from_matrix(matrix)


def exp_series(M, tol=None):
    """
    Matrix exponential by scaling and squaring a truncated Taylor series.

    The series is summed until the next term's max-norm falls below ``tol``
    relative to the partial sum.
    """
    tol = get_setting("QHT_EXP_TOLERANCE", tol)
    M = np.asarray(M, dtype=complex)
    n = M.shape[0]
    norm = np.abs(M).sum(axis=1).max() if M.size else 0.0
    squarings = max(0, math.ceil(math.log2(norm / 0.5))) if norm > 0.5 else 0
    scaled = M / 2.0**squarings

    result = np.eye(n, dtype=complex)
    term = np.eye(n, dtype=complex)
    for k in range(1, _MAX_TERMS + 1):
        term = term.dot(scaled) / k
        result = result + term
        if np.abs(term).max() <= tol * max(1.0, np.abs(result).max()):
            break
    for _ in range(squarings):
        result = result.dot(result)
    logger.debug("exp_series: %d squarings, %d terms", squarings, k)
    return result


def exp_algebra_element(coefficients, t=1.0, catalog=MatrixCatalog.XHAT):
    """``exp(t * sum_i c_i m_i)`` for a combination of matrix generators."""
    combination = np.zeros((3, 3), dtype=complex)
    for index, value in coefficients.items():
        combination = combination + complex(value) * algebra_generator(catalog, int(index))
    return GroupElement.from_matrix(exp_series(t * combination))
