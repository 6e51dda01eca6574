import logging
from dataclasses import dataclass

from sage_qht.helpers.choices import FixedPointKind
from sage_qht.helpers.exceptions import CoincidentPoints, NonInvertible
from sage_qht.scalars.quaternion import Quaternion

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QhtTransform:
    """The similarity ``G(q) = q u + v``; ``u`` acts from the right."""

    u: Quaternion
    v: Quaternion

    @classmethod
    def identity(cls):
        return cls(Quaternion.exact(1), Quaternion.exact(0))

    @property
    def is_invertible(self):
        return not self.u.is_zero()

    def __call__(self, q):
        return q * self.u + self.v

    def to_dict(self):
        return {"u": self.u.to_dict(), "v": self.v.to_dict()}


@dataclass(frozen=True)
class FixedPointResult:
    kind: FixedPointKind
    finite_point: Quaternion = None

    def to_dict(self):
        return {
            "kind": self.kind.value,
            "finite_point": None if self.finite_point is None else self.finite_point.to_dict(),
        }


@dataclass(frozen=True)
class SimilarityDecomposition:
    rotation: Quaternion
    dilation: float
    translation: Quaternion

    def recompose(self):
        return QhtTransform(self.rotation * self.dilation, self.translation)

    def to_dict(self):
        return {
            "rotation": self.rotation.to_dict(),
            "dilation": self.dilation,
            "translation": self.translation.to_dict(),
        }


def apply(T, q):
    return T(q)


def compose(T2, T1):
    """``T2 after T1``: ``(q u1 + v1) u2 + v2``."""
    return QhtTransform(T1.u * T2.u, T1.v * T2.u + T2.v)


def inverse(T):
    if not T.is_invertible:
        raise NonInvertible("u = 0: the transform is a constant map.")
    u_inv = T.u.inverse()
    return QhtTransform(u_inv, -(T.v * u_inv))


def fixed_points(T):
    """
    Fixed points of ``q u + v``. Infinity is always fixed; a finite point
    ``v (1 - u)^-1`` exists whenever ``u != 1``.
    """
    one_minus_u = 1 - T.u
    if one_minus_u.is_zero():
        kind = FixedPointKind.ALL_POINTS if T.v.is_zero() else FixedPointKind.INFINITY_ONLY
        return FixedPointResult(kind)
    point = T.v * one_minus_u.inverse()
    logger.debug("Finite fixed point %s for %s", point, T)
    return FixedPointResult(FixedPointKind.FINITE_AND_INFINITY, point)


def decompose(T):
    if not T.is_invertible:
        raise NonInvertible("u = 0 has no rotation/dilation split.")
    dilation = T.u.norm()
    return SimilarityDecomposition(T.u.to_floating() / dilation, dilation, T.v)


def three_point_ratio(q, q1, q2):
    """``(q - q1)(q - q2)^-1``, the inverse on the right."""
    difference = q - q2
    if difference.is_zero():
        raise CoincidentPoints("q and q2 coincide.")
    return (q - q1) * difference.inverse()


def difference_factor(T, q, q1):
    """``G(q) - G(q1)``, which equals ``(q - q1) u``."""
    return T(q) - T(q1)
