from django.db import models


class Catalog(models.TextChoices):
    """Differential-operator generator catalogs."""

    X = "X", "x (quaternion variable)"
    XBAR = "XBAR", "x-bar (conjugate variable)"
    G = "G", "g (QHT algebra)"
    HEISENBERG_A = "HEISENBERG_A", "Heisenberg {x1, x4, x3}"
    HEISENBERG_B = "HEISENBERG_B", "Heisenberg {x1, x4, x6}"
    SL2 = "SL2", "sl(2) triple"


class MatrixCatalog(models.TextChoices):
    """3x3 matrix generator catalogs."""

    XHAT = "XHAT", "x-hat matrices"
    GHAT = "GHAT", "g-hat matrices"
    HHAT_A = "HHAT_A", "Heisenberg h matrices"
    HHAT_B = "HHAT_B", "Heisenberg h-tilde matrices"


class HolomorphyClass(models.TextChoices):
    LEFT = "LeftHolomorphic", "Left holomorphic"
    CONJUGATE_LEFT = "ConjugateLeftHolomorphic", "Conjugate left holomorphic"
    NEITHER = "Neither", "Neither"


class FixedPointKind(models.TextChoices):
    ALL_POINTS = "AllPoints", "Every point is fixed"
    INFINITY_ONLY = "InfinityOnly", "Only infinity is fixed"
    FINITE_AND_INFINITY = "FiniteAndInfinity", "A finite point and infinity"


class SubgroupFlag(models.TextChoices):
    GENERAL_X = "GeneralX", "General X"
    MOEBIUS = "Moebius", "Moebius"
    HEISENBERG = "Heisenberg", "Heisenberg"
    HEISENBERG_TILDE = "HeisenbergTilde", "Heisenberg (tilde form)"
    QHT = "QHT", "QHT"
    UNIMODULAR = "Unimodular", "Unimodular"


class OutputFormat(models.TextChoices):
    TEXT = "text", "Plain text"
    JSON = "json", "JSON"
