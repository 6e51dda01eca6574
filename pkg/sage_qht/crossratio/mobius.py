import logging
from dataclasses import dataclass

from sage_qht.helpers.exceptions import CoincidentPoints, DegenerateParams
from sage_qht.utils.config import get_setting

from .extended import INFINITY, ExtendedComplex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MobiusParams:
    """``z -> (a z + b) / (c z + d)``, defined up to a common non-zero scale."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, complex(getattr(self, name)))

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    @property
    def determinant(self):
        return self.a * self.d - self.b * self.c

    def scaled(self, factor):
        return MobiusParams(self.a * factor, self.b * factor, self.c * factor, self.d * factor)

    def ensure_nondegenerate(self, tol=None):
        tol = get_setting("QHT_MOBIUS_DEGENERACY_TOLERANCE", tol)
        scale = abs(self.a) * abs(self.d) + abs(self.b) * abs(self.c) + 1
        if abs(self.determinant) < tol * scale:
            raise DegenerateParams(f"ad - bc = {self.determinant} for {self}.")

    def to_dict(self):
        return {name: [value.real, value.imag] for name, value in zip("abcd", self.as_tuple())}

    def as_tuple(self):
        return (self.a, self.b, self.c, self.d)


def mobius_apply(m, z, tol=None):
    m.ensure_nondegenerate(tol)
    z = ExtendedComplex.coerce(z)
    if z.is_infinite:
        return INFINITY if m.c == 0 else ExtendedComplex(m.a / m.c)
    denominator = m.c * z.value + m.d
    if denominator == 0:
        return INFINITY
    return ExtendedComplex((m.a * z.value + m.b) / denominator)


def mobius_compose(m1, m2):
    """``m1 after m2`` as the 2x2 matrix product."""
    return MobiusParams(
        m1.a * m2.a + m1.b * m2.c,
        m1.a * m2.b + m1.b * m2.d,
        m1.c * m2.a + m1.d * m2.c,
        m1.c * m2.b + m1.d * m2.d,
    )


def mobius_inverse(m):
    m.ensure_nondegenerate()
    return MobiusParams(m.d, -m.b, -m.c, m.a)


def mobius_from_three_points(z1, z2, z3):
    """The map sending ``0, 1, inf`` to ``z1, z2, z3``."""
    z1, z2, z3 = (ExtendedComplex.coerce(z) for z in (z1, z2, z3))
    if z1 == z2 or z2 == z3 or z1 == z3:
        raise CoincidentPoints(f"Points {z1}, {z2}, {z3} are not pairwise distinct.")
    if z3.is_infinite:
        return MobiusParams(z2.value - z1.value, z1.value, 0, 1)
    if z1.is_infinite:
        return MobiusParams(z3.value, z2.value - z3.value, 1, 0)
    if z2.is_infinite:
        return MobiusParams(z3.value, -z1.value, 1, -1)
    w1, w2, w3 = z1.value, z2.value, z3.value
    return MobiusParams(w3 * (w2 - w1), w1 * (w3 - w2), w2 - w1, w3 - w2)


def mobius_between(triple_from, triple_to):
    """The unique map sending one triple of distinct points onto another."""
    source = mobius_from_three_points(*triple_from)
    target = mobius_from_three_points(*triple_to)
    return mobius_compose(target, mobius_inverse(source))
