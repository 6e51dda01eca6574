import logging
from dataclasses import dataclass

from sage_qht.scalars.quaternion import Quaternion
from sage_qht.strategies import LeftChainStrategy
from sage_qht.utils.config import get_setting

logger = logging.getLogger(__name__)

_AXES = (
    Quaternion.floating(1),
    Quaternion.floating(0, 1),
    Quaternion.floating(0, 0, 1),
    Quaternion.floating(0, 0, 0, 1),
)


@dataclass(frozen=True)
class DerivativeEstimates:
    """The four candidate left derivatives of ``F`` at a point.

    ``E0``/``E1`` are the symplectic components of ``F`` at the point.
    """

    d0: Quaternion
    d1: Quaternion
    d2: Quaternion
    d3: Quaternion
    E0: complex
    E1: complex

    def __iter__(self):
        return iter((self.d0, self.d1, self.d2, self.d3))

    def to_dict(self):
        return {
            "d0": self.d0.to_dict(),
            "d1": self.d1.to_dict(),
            "d2": self.d2.to_dict(),
            "d3": self.d3.to_dict(),
            "E0": self.E0,
            "E1": self.E1,
        }


def partial_derivatives(F, q, h=None):
    """Central differences of ``F`` along the real axes 1, i, j, k."""
    h = get_setting("QHT_FD_STEP", h)
    if h <= 0:
        raise ValueError(f"Step h must be positive, got {h}.")
    q = q.to_floating()
    partials = []
    for axis in _AXES:
        step = axis * h
        partials.append((F(q + step) - F(q - step)) / (2 * h))
    logger.debug("Stencil of 8 points around %s evaluated with h=%s", q, h)
    return partials


def left_derivative_fd(F, q, h=None):
    partials = partial_derivatives(F, q, h)
    d0, d1, d2, d3 = LeftChainStrategy().estimates(partials)
    value = F(q.to_floating()).to_floating().symplectic_split()
    return DerivativeEstimates(d0, d1, d2, d3, value.z, value.zeta)


def cr_residual(F, q, h=None):
    """
    Largest of ``|dz E0 - dzetabar conj(E1)|`` and ``|dzeta E0 + dzbar conj(E1)|``.

    Wirtinger derivatives are taken without their factor 1/2.
    """
    partials = [partial.to_floating().symplectic_split() for partial in partial_derivatives(F, q, h)]
    e0 = [pair.z for pair in partials]
    e1_conj = [pair.zeta.conjugate() for pair in partials]

    first = (e0[0] - 1j * e0[1]) - (e1_conj[2] + 1j * e1_conj[3])
    second = (e0[2] - 1j * e0[3]) + (e1_conj[0] + 1j * e1_conj[1])
    return max(abs(first), abs(second))
