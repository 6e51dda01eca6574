import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Number

from sage_qht.helpers.exceptions import DegenerateTransform, PoleAtPoint, ZeroQuaternion
from sage_qht.scalars.gaussian import GaussianRational
from sage_qht.utils.config import get_setting

logger = logging.getLogger(__name__)


def _is_exact_scalar(value):
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def _exact(value):
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


@dataclass(frozen=True)
class SymplecticPair:
    """The pair (z, zeta) of ``q = z + zeta*j``.

    ``z`` and ``zeta`` are ``complex`` for floating quaternions and
    :class:`GaussianRational` for exact ones.
    """

    z: object
    zeta: object


@dataclass(frozen=True)
class Quaternion:
    """
    Quaternion ``x0 + x1*i + x2*j + x3*k``.

    Components are either exact (``int``/``Fraction``) or ``float``; the
    same type serves both modes and mixing promotes to floating, just like
    Python's own numeric tower.
    """

    x0: Number = 0
    x1: Number = 0
    x2: Number = 0
    x3: Number = 0

    @classmethod
    def exact(cls, x0=0, x1=0, x2=0, x3=0):
        return cls(_exact(x0), _exact(x1), _exact(x2), _exact(x3))

    @classmethod
    def floating(cls, x0=0.0, x1=0.0, x2=0.0, x3=0.0):
        return cls(float(x0), float(x1), float(x2), float(x3))

    @classmethod
    def from_symplectic(cls, pair):
        return cls(pair.z.real, pair.z.imag, pair.zeta.real, pair.zeta.imag)

    @property
    def is_exact(self):
        return all(_is_exact_scalar(x) for x in self)

    @property
    def real(self):
        return self.x0

    def __iter__(self):
        return iter((self.x0, self.x1, self.x2, self.x3))

    def to_floating(self):
        return Quaternion.floating(*self)

    def symplectic_split(self):
        if self.is_exact:
            return SymplecticPair(
                GaussianRational(self.x0, self.x1), GaussianRational(self.x2, self.x3)
            )
        return SymplecticPair(complex(self.x0, self.x1), complex(self.x2, self.x3))

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(
                self.x0 + other.x0,
                self.x1 + other.x1,
                self.x2 + other.x2,
                self.x3 + other.x3,
            )
        if isinstance(other, Number) and not isinstance(other, complex):
            return Quaternion(self.x0 + other, self.x1, self.x2, self.x3)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.x0, -self.x1, -self.x2, -self.x3)

    def __sub__(self, other):
        if isinstance(other, (Quaternion, Number)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            a0, a1, a2, a3 = self
            b0, b1, b2, b3 = other
            return Quaternion(
                a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
            )
        if isinstance(other, Number) and not isinstance(other, complex):
            return Quaternion(*(x * other for x in self))
        return NotImplemented

    def __rmul__(self, other):
        # real scalars commute with every quaternion
        if isinstance(other, Number) and not isinstance(other, complex):
            return Quaternion(*(other * x for x in self))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Number) and not isinstance(other, complex):
            if _is_exact_scalar(other) and self.is_exact:
                other = Fraction(other)
            return Quaternion(*(x / other for x in self))
        return NotImplemented

    def conjugate(self):
        return Quaternion(self.x0, -self.x1, -self.x2, -self.x3)

    def norm_squared(self):
        return self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3

    def norm(self):
        return math.sqrt(self.norm_squared())

    def is_zero(self):
        return self.norm_squared() == 0

    def inverse(self):
        norm_squared = self.norm_squared()
        if norm_squared == 0:
            raise ZeroQuaternion("The zero quaternion has no inverse.")
        if self.is_exact:
            norm_squared = Fraction(norm_squared)
        return self.conjugate() / norm_squared

    def is_close(self, other, tol=1e-12):
        return (self - other).norm() <= tol

    def to_dict(self):
        return {f"x{index}": _format_scalar(x) for index, x in enumerate(self)}

    def __str__(self):
        parts = []
        for value, unit in zip(self, ("", "i", "j", "k")):
            if value == 0:
                continue
            text = str(value) if not unit or abs(value) != 1 else ("-" if value < 0 else "")
            if unit and text not in ("", "-"):
                text = f"{text}*"
            parts.append(f"{text}{unit}")
        if not parts:
            return "0"
        return "+".join(parts).replace("+-", "-")


def _format_scalar(value):
    if _is_exact_scalar(value):
        return str(Fraction(value))
    return repr(float(value))


ONE = Quaternion.exact(1)
I = Quaternion.exact(0, 1)
J = Quaternion.exact(0, 0, 1)
K = Quaternion.exact(0, 0, 0, 1)
ZERO = Quaternion.exact()


def mul(a, b):
    return a * b


def conjugate(q):
    return q.conjugate()


def norm(q):
    return q.norm()


def inverse(q):
    return q.inverse()


def symplectic_split(q):
    return q.symplectic_split()


def from_symplectic(pair):
    return Quaternion.from_symplectic(pair)


def symplectic_mul(a, b):
    """
    Product through ``(z + zeta j)(e0 + e1 j) = (e0 z - conj(e1) zeta)
    + (e1 z + conj(e0) zeta) j``.

    Independent of the component-wise Hamilton product in ``Quaternion``.
    """
    left, right = a.symplectic_split(), b.symplectic_split()
    z, zeta = left.z, left.zeta
    e0, e1 = right.z, right.zeta
    return Quaternion.from_symplectic(
        SymplecticPair(
            e0 * z - e1.conjugate() * zeta,
            e1 * z + e0.conjugate() * zeta,
        )
    )


def mobius_delta(a, b, c, d):
    """``|a|^2 |d|^2 + |b|^2 |c|^2 - 2 Re[a conj(c) d conj(b)]``."""
    cross = a * c.conjugate() * d * b.conjugate()
    return (
        a.norm_squared() * d.norm_squared()
        + b.norm_squared() * c.norm_squared()
        - 2 * cross.real
    )


def quat_mobius(a, b, c, d, q, tol=None):
    """Evaluate ``(aq + b)(cq + d)^-1``."""
    delta = mobius_delta(a, b, c, d)
    if all(x.is_exact for x in (a, b, c, d)):
        degenerate = delta == 0
    else:
        tol = get_setting("QHT_DEGENERACY_TOLERANCE", tol)
        scale = a.norm_squared() * d.norm_squared() + b.norm_squared() * c.norm_squared()
        degenerate = abs(delta) < tol * (scale + 1)
    if degenerate:
        raise DegenerateTransform(f"Delta = {delta} vanishes for ({a}, {b}, {c}, {d}).")

    denominator = c * q + d
    if denominator.is_zero():
        raise PoleAtPoint(f"cq + d vanishes at q = {q}.")
    logger.debug("Quaternionic Moebius map with Delta=%s evaluated at %s", delta, q)
    return (a * q + b) * denominator.inverse()
