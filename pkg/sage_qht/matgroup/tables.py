import logging
from itertools import combinations

from sage_qht.helpers.choices import MatrixCatalog
from sage_qht.helpers.exceptions import NotClosed
from sage_qht.symop.algebra import AlgebraElement, CommutatorTable
from sage_qht.symop.reference import compare_tables
from sage_qht.utils.linalg import solve_in_span

from .generators import REFERENCE_NAMES, matrix_basis

logger = logging.getLogger(__name__)


def _coordinates(matrix):
    return {(r, c): matrix[r, c] for r in range(3) for c in range(3) if matrix[r, c]}


def matrix_commutator(A, B):
    return A.dot(B) - B.dot(A)


def matrix_commutator_table(catalog):
    """Exact ``[m_i, m_j]`` of a matrix catalog in its own basis."""
    catalog = MatrixCatalog(catalog)
    matrices = matrix_basis(catalog, exact=True)
    vectors = [_coordinates(m) for m in matrices]
    entries = {}
    for i, j in combinations(range(1, len(matrices) + 1), 2):
        bracket = matrix_commutator(matrices[i - 1], matrices[j - 1])
        coordinates = solve_in_span(vectors, _coordinates(bracket))
        if coordinates is None:
            raise NotClosed(bracket, (i, j))
        entries[(i, j)] = AlgebraElement(
            {k + 1: value for k, value in enumerate(coordinates)}, catalog
        )
    return CommutatorTable(catalog, len(matrices), entries)


def verify_matrix_table(catalog):
    catalog = MatrixCatalog(catalog)
    return compare_tables(catalog, matrix_commutator_table(catalog), REFERENCE_NAMES[catalog])
