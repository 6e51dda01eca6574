from abc import ABC, abstractmethod
from itertools import combinations


class ChainStrategy(ABC):
    """
    One Cauchy-Riemann chain of a quaternion function.

    A chain turns the four real partial derivatives of ``F`` into four
    candidate quaternionic derivatives; ``F`` satisfies the chain when the
    candidates agree.
    """

    verdict = None

    @abstractmethod
    def estimates(self, partials):
        """Map the partials along 1, i, j, k to the four candidates."""
        pass

    def residual(self, partials):
        candidates = self.estimates(partials)
        spread = max((a - b).norm() for a, b in combinations(candidates, 2))
        return spread / (1 + max(candidate.norm() for candidate in candidates))
