import logging
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from sage_qht.helpers.choices import Catalog
from sage_qht.helpers.exceptions import DependentBasis, NotClosed
from sage_qht.scalars.gaussian import ZERO, GaussianRational
from sage_qht.utils.linalg import is_independent, rank, solve_in_span

from .catalog import basis as catalog_basis
from .catalog import generator
from .operator import DiffOperator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlgebraElement:
    """
    Finite combination ``sum_k c_k b_k`` of the generators of one catalog.

    ``coefficients`` maps 1-based generator indices to Gaussian rationals;
    zero entries are dropped. ``catalog`` is ``None`` for an ad-hoc basis.
    """

    coefficients: dict = field(default_factory=dict)
    catalog: str = None

    def __post_init__(self):
        cleaned = {
            int(index): GaussianRational.coerce(value)
            for index, value in self.coefficients.items()
            if GaussianRational.coerce(value)
        }
        object.__setattr__(self, "coefficients", dict(sorted(cleaned.items())))

    def coefficient(self, index):
        return self.coefficients.get(index, ZERO)

    def is_zero(self):
        return not self.coefficients

    def to_operator(self, basis=None):
        """Realize the element as a combination of operators."""
        result = DiffOperator()
        for index, value in self.coefficients.items():
            operator = basis[index - 1] if basis is not None else generator(self.catalog, index)
            result = result + operator * value
        return result

    def __add__(self, other):
        merged = dict(self.coefficients)
        for index, value in other.coefficients.items():
            merged[index] = merged.get(index, ZERO) + value
        return AlgebraElement(merged, self.catalog or other.catalog)

    def __neg__(self):
        return AlgebraElement({k: -v for k, v in self.coefficients.items()}, self.catalog)

    def to_dict(self):
        return {str(index): str(value) for index, value in self.coefficients.items()}

    def __str__(self):
        if not self.coefficients:
            return "0"
        prefix = "b" if self.catalog is None else str(self.catalog).lower()
        return " + ".join(f"{value}*{prefix}{index}" for index, value in self.coefficients.items())


@dataclass(frozen=True)
class CommutatorTable:
    """Commutators ``[b_i, b_j]`` for ``i < j``, in the basis itself."""

    catalog: str
    size: int
    entries: dict

    def get(self, i, j):
        if i == j:
            return AlgebraElement({}, self.catalog)
        if i > j:
            return -self.entries[(j, i)]
        return self.entries[(i, j)]

    def to_dict(self):
        return {
            "catalog": self.catalog,
            "pairs": [
                {"i": i, "j": j, "result": element.to_dict()}
                for (i, j), element in sorted(self.entries.items())
            ],
        }


@dataclass(frozen=True)
class ClosureResult:
    closed: bool
    witness: DiffOperator = None
    pair: tuple = None

    def __bool__(self):
        return self.closed


def _resolve(basis_or_catalog):
    if isinstance(basis_or_catalog, (str, Catalog)):
        return Catalog(basis_or_catalog), catalog_basis(basis_or_catalog)
    return None, list(basis_or_catalog)


def express(operators, target):
    """Coordinates of ``target`` in ``operators`` or ``None`` outside the span."""
    return solve_in_span([op.coordinates() for op in operators], target.coordinates())


def commutator_table(basis):
    """
    Exact commutator table of a catalog (or of an explicit operator list).

    Raises ``NotClosed`` carrying the first commutator that leaves the span.
    """
    catalog, operators = _resolve(basis)
    entries = {}
    for i, j in combinations(range(1, len(operators) + 1), 2):
        bracket = operators[i - 1].commutator(operators[j - 1])
        coordinates = express(operators, bracket)
        if coordinates is None:
            raise NotClosed(bracket, (i, j))
        entries[(i, j)] = AlgebraElement(
            {k + 1: value for k, value in enumerate(coordinates)}, catalog
        )
        logger.debug("[b%d, b%d] = %s", i, j, entries[(i, j)])
    return CommutatorTable(catalog, len(operators), entries)


def is_closed(operators):
    """Whether pairwise commutators stay in the span; operator ``j`` is
    checked against every earlier one before moving to ``j + 1``."""
    operators = list(operators)
    for j in range(len(operators)):
        for i in range(j):
            bracket = operators[i].commutator(operators[j])
            if express(operators, bracket) is None:
                logger.info("Span not closed: [b%d, b%d] = %s", i + 1, j + 1, bracket)
                return ClosureResult(False, bracket, (i + 1, j + 1))
    return ClosureResult(True)


def structure_constants(basis):
    """Tensor ``c[i, j, k]`` (0-based) with ``[b_i, b_j] = sum_k c[i, j, k] b_k``."""
    _, operators = _resolve(basis)
    if not is_independent([op.coordinates() for op in operators]):
        raise DependentBasis("Structure constants need a linearly independent basis.")
    table = commutator_table(operators)
    n = len(operators)
    constants = np.full((n, n, n), ZERO, dtype=object)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            element = table.get(i, j)
            for k in range(1, n + 1):
                constants[i - 1, j - 1, k - 1] = element.coefficient(k)
    return constants


def adjoint_rep(basis):
    """``ad(b_i)`` with entry ``[k, j] = c_ij^k``, column ``j`` being ``[b_i, b_j]``."""
    constants = structure_constants(basis)
    return [constants[i].T.copy() for i in range(constants.shape[0])]


def _in_span_of(operators, subset, target):
    return express([operators[s - 1] for s in subset], target) is not None


def ideal_check(basis, subset_indices):
    _, operators = _resolve(basis)
    subset = sorted(set(subset_indices))
    return all(
        _in_span_of(operators, subset, b.commutator(operators[s - 1]))
        for b in operators
        for s in subset
    )


def is_subalgebra(basis, subset_indices):
    _, operators = _resolve(basis)
    subset = sorted(set(subset_indices))
    return all(
        _in_span_of(operators, subset, operators[s - 1].commutator(operators[t - 1]))
        for s, t in combinations(subset, 2)
    )


def jacobi_violations(basis):
    """Triples ``(i, j, k)`` (1-based) whose cyclic Jacobi sum is non-zero."""
    _, operators = _resolve(basis)
    violations = []
    for i, j, k in combinations(range(len(operators)), 3):
        a, b, c = operators[i], operators[j], operators[k]
        total = a.commutator(b.commutator(c)) + b.commutator(c.commutator(a)) + c.commutator(
            a.commutator(b)
        )
        if not total.is_zero():
            violations.append((i + 1, j + 1, k + 1))
    return violations


def killing_form(basis):
    adjoint = adjoint_rep(basis)
    n = len(adjoint)
    form = np.full((n, n), ZERO, dtype=object)
    for i in range(n):
        for j in range(n):
            form[i, j] = sum(np.diag(adjoint[i].dot(adjoint[j])), ZERO)
    return form


def is_semisimple(basis):
    """Cartan's criterion: the Killing form is non-degenerate."""
    form = killing_form(basis)
    return rank(form.tolist()) == form.shape[0]


def infinitesimal_element(epsilon, delta, conjugate=False):
    """
    The infinitesimal similarity ``q -> q(1 + epsilon) + delta`` in the
    ``X`` basis, or ``qbar(1 + epsilon) + delta`` in the ``XBAR`` basis.
    """
    e0, e1 = (GaussianRational.coerce(part) for part in _split(epsilon))
    d0, d1 = (GaussianRational.coerce(part) for part in _split(delta))
    if conjugate:
        coefficients = {1: d0, 2: e0, 3: e1.conjugate(), 4: d1, 5: -e0.conjugate(), 6: e1}
        return AlgebraElement(coefficients, Catalog.XBAR)
    coefficients = {1: d0, 2: e0, 3: -e1.conjugate(), 4: d1, 5: e0.conjugate(), 6: e1}
    return AlgebraElement(coefficients, Catalog.X)


def _split(q):
    pair = q.symplectic_split()
    return pair.z, pair.zeta
