from sage_qht.helpers.choices import Catalog
from sage_qht.helpers.exceptions import UnknownIndex
from sage_qht.scalars.gaussian import I

from .operator import DiffOperator
from .polynomial import z, zbar, zeta

_X = (
    DiffOperator.partial("z"),
    DiffOperator.partial("z", z),
    DiffOperator.partial("z", zeta),
    DiffOperator.partial("zeta"),
    DiffOperator.partial("zeta", zeta),
    DiffOperator.partial("zeta", z),
)

_XBAR = (
    DiffOperator.partial("zbar"),
    DiffOperator.partial("zbar", zbar),
    DiffOperator.partial("zbar", zeta),
    DiffOperator.partial("zeta"),
    DiffOperator.partial("zeta", zeta),
    DiffOperator.partial("zeta", zbar),
)

x1, x2, x3, x4, x5, x6 = _X

_G = (
    x3 + x6,
    I * (x6 - x3),
    x2 - x5,
    -(x2 + x5),
    x1,
    -x4,
)

CATALOGS = {
    Catalog.X: _X,
    Catalog.XBAR: _XBAR,
    Catalog.G: _G,
    # bound to the indices {x1, x4, x3} and {x1, x4, x6}
    Catalog.HEISENBERG_A: (x1, x4, x3),
    Catalog.HEISENBERG_B: (x1, x4, x6),
    Catalog.SL2: (x3, x6, x5 - x2),
}


def basis(catalog):
    return list(CATALOGS[Catalog(catalog)])


def generator(catalog, index):
    """The ``index``-th (1-based) generator of ``catalog``."""
    operators = CATALOGS[Catalog(catalog)]
    if not isinstance(index, int) or not 1 <= index <= len(operators):
        raise UnknownIndex(f"{catalog} has generators 1..{len(operators)}, got {index!r}.")
    return operators[index - 1]
