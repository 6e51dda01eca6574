import logging

from sage_qht.scalars.gaussian import GaussianRational

from .polynomial import VARIABLES, Polynomial, format_coefficient, format_monomial

logger = logging.getLogger(__name__)


class DiffOperator:
    """
    First-order operator ``sum_v p_v * d_v`` over ``z, zbar, zeta, zetabar``.

    Only first-order terms are representable; the commutator of two such
    operators is again first order.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        cleaned = {}
        for variable, coefficient in (terms or {}).items():
            if variable not in VARIABLES:
                raise KeyError(f"Unknown variable {variable!r}.")
            if not isinstance(coefficient, Polynomial):
                coefficient = Polynomial.constant(coefficient)
            if coefficient:
                cleaned[variable] = coefficient
        object.__setattr__(self, "_terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("DiffOperator is immutable.")

    @classmethod
    def partial(cls, variable, coefficient=1):
        return cls({variable: coefficient})

    @property
    def terms(self):
        return dict(self._terms)

    def coefficient(self, variable):
        return self._terms.get(variable, Polynomial())

    def apply(self, polynomial):
        result = Polynomial()
        for variable, coefficient in self._terms.items():
            result = result + coefficient * polynomial.derivative(variable)
        return result

    __call__ = apply

    def commutator(self, other):
        """``[A, B] = sum_v (A(b_v) - B(a_v)) d_v``."""
        bracket = DiffOperator(
            {
                variable: self.apply(other.coefficient(variable))
                - other.apply(self.coefficient(variable))
                for variable in VARIABLES
            }
        )
        logger.debug("[%s, %s] = %s", self, other, bracket)
        return bracket

    def coordinates(self):
        """Flat ``(variable, exponents) -> coefficient`` view for linear algebra."""
        return {
            (variable, exponents): coefficient
            for variable, polynomial in self._terms.items()
            for exponents, coefficient in polynomial.terms()
        }

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __neg__(self):
        return DiffOperator({v: -p for v, p in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return DiffOperator(
            {v: self.coefficient(v) + other.coefficient(v) for v in VARIABLES}
        )

    def __sub__(self, other):
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        try:
            scalar = GaussianRational.coerce(scalar)
        except TypeError:
            return NotImplemented
        return DiffOperator({v: p * scalar for v, p in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        parts = []
        for variable in VARIABLES:
            polynomial = self._terms.get(variable)
            if polynomial is None:
                continue
            for exponents, coefficient in polynomial.terms():
                factors = [] if coefficient == 1 else [format_coefficient(coefficient)]
                monomial = format_monomial(exponents)
                if monomial:
                    factors.append(monomial)
                factors.append(f"d{variable}")
                parts.append("*".join(factors))
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"DiffOperator({self})"


def commutator(a, b):
    return a.commutator(b)


def apply(op, polynomial):
    return op.apply(polynomial)


dz = DiffOperator.partial("z")
dzbar = DiffOperator.partial("zbar")
dzeta = DiffOperator.partial("zeta")
dzetabar = DiffOperator.partial("zetabar")
