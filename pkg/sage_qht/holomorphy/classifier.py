import logging
import math
from dataclasses import dataclass
from operator import itemgetter

import numpy as np

from sage_qht.helpers.choices import HolomorphyClass
from sage_qht.helpers.exceptions import EmptySampleSet
from sage_qht.scalars.quaternion import Quaternion
from sage_qht.strategies import ConjugateChainStrategy, LeftChainStrategy
from sage_qht.utils.config import get_setting

from .derivatives import partial_derivatives

logger = logging.getLogger(__name__)

CHAINS = (LeftChainStrategy(), ConjugateChainStrategy())


@dataclass(frozen=True)
class HolomorphyVerdict:
    verdict: HolomorphyClass
    max_residual: float
    worst_point: Quaternion

    def to_dict(self):
        return {
            "class": self.verdict.value,
            "max_residual": self.max_residual if math.isfinite(self.max_residual) else None,
            "worst_point": self.worst_point.to_dict(),
        }


def sample_points(n=None, seed=None, bound=None):
    """Seeded points with components uniform in ``[-bound, bound]``."""
    n = get_setting("QHT_SAMPLE_SIZE", n)
    seed = get_setting("QHT_SAMPLE_SEED", seed)
    bound = get_setting("QHT_SAMPLE_BOUND", bound)
    rng = np.random.default_rng(seed)
    return [Quaternion.floating(*row) for row in rng.uniform(-bound, bound, size=(n, 4))]


def _chain_residual(chain, partials):
    # NaN compares false against every tolerance and poisons max()
    if not all(math.isfinite(component) for partial in partials for component in partial):
        return math.inf
    residual = chain.residual(partials)
    return residual if math.isfinite(residual) else math.inf


def classify_holomorphy(F, points=None, h=None, tol=None):
    """
    Decide which Cauchy-Riemann chain ``F`` satisfies on the sample.

    The left chain is tried first; a function passing neither reports the
    left-chain residual. A non-finite residual fails its chain.
    """
    points = list(sample_points() if points is None else points)
    if not points:
        raise EmptySampleSet("classify_holomorphy needs at least one sample point.")
    tol = get_setting("QHT_HOLOMORPHY_TOLERANCE", tol)

    residuals = {chain.verdict: [] for chain in CHAINS}
    for point in points:
        partials = partial_derivatives(F, point, h)
        for chain in CHAINS:
            residuals[chain.verdict].append((_chain_residual(chain, partials), point))
    worst = {verdict: max(pairs, key=itemgetter(0)) for verdict, pairs in residuals.items()}

    for chain in CHAINS:
        residual, point = worst[chain.verdict]
        if residual <= tol:
            logger.info("Function classified %s (residual %.3g)", chain.verdict, residual)
            return HolomorphyVerdict(chain.verdict, residual, point)

    residual, point = worst[HolomorphyClass.LEFT]
    logger.info("Function satisfies no chain (left residual %.3g)", residual)
    return HolomorphyVerdict(HolomorphyClass.NEITHER, residual, point)
