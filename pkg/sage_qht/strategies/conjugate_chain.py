from sage_qht.helpers.choices import HolomorphyClass

from .base import ChainStrategy
from .left_chain import UNITS


class ConjugateChainStrategy(ChainStrategy):
    """The chain of ``F(qbar)``: ``d0 F = i d1 F = j d2 F = k d3 F``."""

    verdict = HolomorphyClass.CONJUGATE_LEFT

    def estimates(self, partials):
        return [partials[0]] + [unit * partial for unit, partial in zip(UNITS[1:], partials[1:])]
