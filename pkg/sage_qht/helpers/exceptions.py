class QhtError(Exception):
    """Base class for every domain error raised by sage_qht."""


class ZeroQuaternion(QhtError, ZeroDivisionError):
    """The zero quaternion has no inverse."""


class DegenerateTransform(QhtError, ValueError):
    """A quaternionic Moebius map with vanishing Delta."""


class PoleAtPoint(QhtError, ZeroDivisionError):
    """The denominator cq + d vanishes at the evaluation point."""


class EmptySampleSet(QhtError, ValueError):
    """Holomorphy classification needs at least one sample point."""


class UnknownIndex(QhtError, LookupError):
    """A generator index outside its catalog."""


class NotClosed(QhtError):
    """A commutator left the linear span of the given operators."""

    def __init__(self, witness, pair=None):
        self.witness = witness
        self.pair = pair
        super().__init__(f"Commutator {pair} = {witness} is outside the span.")


class DependentBasis(QhtError, ValueError):
    """The basis elements are linearly dependent."""


class NotInX(QhtError, ValueError):
    """The matrix bottom row is not (0, 0, 1)."""


class SingularElement(QhtError, ZeroDivisionError):
    """The 2x2 block of a group element has zero determinant."""


class NotQhtForm(QhtError, ValueError):
    """The matrix does not have the QHT block structure."""


class NonInvertible(QhtError, ZeroDivisionError):
    """A QHT with u = 0 is a constant map."""


class CoincidentPoints(QhtError, ValueError):
    """Points that must be distinct coincide."""


class TooManyCoincidences(QhtError, ValueError):
    """Fewer than three distinct points were given to a cross-ratio."""


class DegenerateParams(QhtError, ValueError):
    """Moebius parameters with ad - bc = 0."""
