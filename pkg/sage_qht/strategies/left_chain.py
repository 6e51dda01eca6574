from sage_qht.helpers.choices import HolomorphyClass
from sage_qht.scalars.quaternion import Quaternion

from .base import ChainStrategy

UNITS = (
    Quaternion.floating(1),
    Quaternion.floating(0, 1),
    Quaternion.floating(0, 0, 1),
    Quaternion.floating(0, 0, 0, 1),
)


class LeftChainStrategy(ChainStrategy):
    """
    ``dF/dq = d0 F = -i d1 F = -j d2 F = -k d3 F``, each unit multiplying
    from the left. Satisfied by ``F(q) = q a + b``.
    """

    verdict = HolomorphyClass.LEFT

    def estimates(self, partials):
        return [partials[0]] + [-unit * partial for unit, partial in zip(UNITS[1:], partials[1:])]
