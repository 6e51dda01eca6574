from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from sage_qht.scalars.gaussian import ZERO, GaussianRational


def to_domain(value):
    """The ``QQ_I`` element of a Gaussian rational or anything it coerces."""
    return GaussianRational.coerce(value).element


def from_domain(element):
    return GaussianRational.from_element(element)


def domain_matrix(rows):
    rows = [[to_domain(value) for value in row] for row in rows]
    shape = (len(rows), len(rows[0]) if rows else 0)
    return DomainMatrix(rows, shape, QQ_I)


def rank(rows):
    if not rows or not rows[0]:
        return 0
    return domain_matrix(rows).rank()


def determinant(rows):
    if not rows:
        return GaussianRational(1)
    return from_domain(domain_matrix(rows).det())


def solve_in_span(vectors, target):
    """
    Express ``target`` as a combination of ``vectors``.

    Vectors are sparse mappings ``key -> scalar``. Returns the coefficient
    list, or ``None`` when ``target`` is outside the span. Free coefficients
    of a dependent family are set to zero.
    """
    keys = sorted({key for vector in (*vectors, target) for key in vector}, key=repr)
    if not keys:
        return [ZERO] * len(vectors)
    rows = [
        [vector.get(key, ZERO) for vector in vectors] + [target.get(key, ZERO)]
        for key in keys
    ]
    reduced, pivots = domain_matrix(rows).rref()
    size = len(vectors)
    if size in pivots:
        return None
    reduced = reduced.to_Matrix()
    coefficients = [ZERO] * size
    for row, column in enumerate(pivots):
        coefficients[column] = from_domain(QQ_I.from_sympy(reduced[row, size]))
    return coefficients


def is_independent(vectors):
    keys = sorted({key for vector in vectors for key in vector}, key=repr)
    if not vectors:
        return True
    if not keys:
        return False
    rows = [[vector.get(key, ZERO) for vector in vectors] for key in keys]
    return rank(rows) == len(vectors)
