import numpy as np

from sage_qht.helpers.choices import MatrixCatalog
from sage_qht.helpers.exceptions import UnknownIndex
from sage_qht.scalars.gaussian import ZERO, GaussianRational


def _unit(row, column, value=1):
    """``value`` at 1-based ``(row, column)`` of a 3x3 exact matrix."""
    matrix = np.full((3, 3), ZERO, dtype=object)
    matrix[row - 1, column - 1] = GaussianRational.coerce(value)
    return matrix


_XHAT = (
    _unit(1, 3),
    _unit(1, 1, -1),
    _unit(1, 2),
    _unit(2, 3, -1),
    _unit(2, 2, -1),
    _unit(2, 1),
)

# hard-coded as printed, not derived from the x-hat combinations
_GHAT = (
    _unit(1, 2) + _unit(2, 1),
    _unit(1, 2, -1j) + _unit(2, 1, 1j),
    _unit(1, 1) + _unit(2, 2, -1),
    _unit(1, 1) + _unit(2, 2),
    _unit(1, 3),
    _unit(2, 3),
)

MATRIX_CATALOGS = {
    MatrixCatalog.XHAT: _XHAT,
    MatrixCatalog.GHAT: _GHAT,
    MatrixCatalog.HHAT_A: (_XHAT[0], _XHAT[3], _XHAT[2]),
    MatrixCatalog.HHAT_B: (_XHAT[0], _XHAT[3], _XHAT[5]),
}

REFERENCE_NAMES = {
    MatrixCatalog.XHAT: "X",
    MatrixCatalog.GHAT: "G",
    MatrixCatalog.HHAT_A: "HEISENBERG_A",
    MatrixCatalog.HHAT_B: "HEISENBERG_B",
}


def to_floating(matrix):
    return np.array([[complex(value) for value in row] for row in matrix], dtype=complex)


def algebra_generator(catalog, i, exact=False):
    """Generator ``i`` (1-based) of a matrix catalog, exact or as ``complex``."""
    matrices = MATRIX_CATALOGS[MatrixCatalog(catalog)]
    if not isinstance(i, int) or not 1 <= i <= len(matrices):
        raise UnknownIndex(f"{catalog} has generators 1..{len(matrices)}, got {i!r}.")
    matrix = matrices[i - 1]
    return matrix.copy() if exact else to_floating(matrix)


def matrix_basis(catalog, exact=True):
    size = len(MATRIX_CATALOGS[MatrixCatalog(catalog)])
    return [algebra_generator(catalog, i, exact=exact) for i in range(1, size + 1)]
