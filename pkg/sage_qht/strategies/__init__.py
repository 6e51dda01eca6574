from .base import ChainStrategy
from .conjugate_chain import ConjugateChainStrategy
from .left_chain import LeftChainStrategy

__all__ = [
    "ChainStrategy",
    "LeftChainStrategy",
    "ConjugateChainStrategy",
]
