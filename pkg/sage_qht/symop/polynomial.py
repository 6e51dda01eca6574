import logging

from sage_qht.scalars.gaussian import GaussianRational

logger = logging.getLogger(__name__)

VARIABLES = ("z", "zbar", "zeta", "zetabar")


def _exponents(variable):
    try:
        position = VARIABLES.index(variable)
    except ValueError:
        raise KeyError(f"Unknown variable {variable!r}; expected one of {VARIABLES}.") from None
    return tuple(1 if index == position else 0 for index in range(len(VARIABLES)))


def _graded_lex(exponents):
    return (-sum(exponents), tuple(-e for e in exponents))


def format_coefficient(value):
    text = str(value)
    if value.re != 0 and value.im != 0:
        return f"({text})"
    return text


def format_monomial(exponents):
    factors = []
    for name, power in zip(VARIABLES, exponents):
        if power == 1:
            factors.append(name)
        elif power > 1:
            factors.append(f"{name}^{power}")
    return "*".join(factors)


class Polynomial:
    """
    Polynomial in ``z, zbar, zeta, zetabar`` with Gaussian rational
    coefficients, keyed by exponent vectors.

    Zero coefficients are never stored, so equality is structural.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        cleaned = {}
        for exponents, coefficient in (terms or {}).items():
            coefficient = GaussianRational.coerce(coefficient)
            if coefficient:
                cleaned[tuple(exponents)] = coefficient
        object.__setattr__(self, "_terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable.")

    @classmethod
    def constant(cls, value):
        return cls({(0, 0, 0, 0): value})

    @classmethod
    def variable(cls, name):
        return cls({_exponents(name): 1})

    def terms(self):
        """``(exponents, coefficient)`` pairs in graded-lex order."""
        return sorted(self._terms.items(), key=lambda item: _graded_lex(item[0]))

    def coefficient(self, exponents):
        return self._terms.get(tuple(exponents), GaussianRational(0))

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __neg__(self):
        return Polynomial({e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        other = _as_polynomial(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for exponents, coefficient in other._terms.items():
            terms[exponents] = terms.get(exponents, 0) + coefficient
        return Polynomial(terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_polynomial(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_polynomial(other)
        if other is None:
            return NotImplemented
        terms = {}
        for left, a in self._terms.items():
            for right, b in other._terms.items():
                exponents = tuple(x + y for x, y in zip(left, right))
                terms[exponents] = terms.get(exponents, 0) + a * b
        return Polynomial(terms)

    __rmul__ = __mul__

    def derivative(self, variable):
        position = VARIABLES.index(variable)
        terms = {}
        for exponents, coefficient in self._terms.items():
            power = exponents[position]
            if power:
                lowered = exponents[:position] + (power - 1,) + exponents[position + 1 :]
                terms[lowered] = coefficient * power
        return Polynomial(terms)

    def evaluate(self, **values):
        """Evaluate at numeric values given by variable name."""
        total = 0
        for exponents, coefficient in self._terms.items():
            term = complex(coefficient)
            for name, power in zip(VARIABLES, exponents):
                if power:
                    term *= values[name] ** power
            total += term
        logger.debug("Evaluated %s at %s", self, values)
        return total

    def __eq__(self, other):
        other = _as_polynomial(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exponents, coefficient in self.terms():
            monomial = format_monomial(exponents)
            if not monomial:
                parts.append(format_coefficient(coefficient))
            elif coefficient == 1:
                parts.append(monomial)
            else:
                parts.append(f"{format_coefficient(coefficient)}*{monomial}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


def _as_polynomial(value):
    if isinstance(value, Polynomial):
        return value
    try:
        return Polynomial.constant(GaussianRational.coerce(value))
    except TypeError:
        return None


z = Polynomial.variable("z")
zbar = Polynomial.variable("zbar")
zeta = Polynomial.variable("zeta")
zetabar = Polynomial.variable("zetabar")
ONE = Polynomial.constant(1)
