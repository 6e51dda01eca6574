import logging
from dataclasses import dataclass

import numpy as np

from sage_qht.helpers.choices import SubgroupFlag
from sage_qht.helpers.exceptions import NotInX, NotQhtForm, SingularElement
from sage_qht.scalars.quaternion import Quaternion, SymplecticPair
from sage_qht.utils.config import get_setting

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupElement:
    """
    Element of X: rows ``(a, b, t_z)``, ``(c, d, t_zeta)``, ``(0, 0, 1)``.

    The translation entries are named ``t_z``/``t_zeta`` so they never
    clash with the quaternion variable ``q``.
    """

    a: complex = 1
    b: complex = 0
    c: complex = 0
    d: complex = 1
    t_z: complex = 0
    t_zeta: complex = 0

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "t_z", "t_zeta"):
            object.__setattr__(self, name, complex(getattr(self, name)))

    @classmethod
    def identity(cls):
        return cls()

    @classmethod
    def from_matrix(cls, matrix, tol=None):
        """Build from a 3x3 array; the bottom row must be ``(0, 0, 1)``."""
        matrix = np.asarray(matrix, dtype=complex)
        if matrix.shape != (3, 3):
            raise NotInX(f"Expected a 3x3 matrix, got shape {matrix.shape}.")
        tol = get_setting("QHT_CLASSIFY_TOLERANCE", tol)
        if np.abs(matrix[2] - np.array([0, 0, 1])).max() > tol:
            raise NotInX(f"Bottom row {matrix[2].tolist()} is not (0, 0, 1).")
        (a, b, t_z), (c, d, t_zeta) = matrix[0], matrix[1]
        return cls(a, b, c, d, t_z, t_zeta)

    def to_matrix(self):
        return np.array(
            [[self.a, self.b, self.t_z], [self.c, self.d, self.t_zeta], [0, 0, 1]],
            dtype=complex,
        )

    @property
    def determinant(self):
        return self.a * self.d - self.b * self.c

    def to_dict(self):
        return {
            "rows": [[[v.real, v.imag] for v in row] for row in self.to_matrix().tolist()],
            "t_z": [self.t_z.real, self.t_z.imag],
            "t_zeta": [self.t_zeta.real, self.t_zeta.imag],
        }


@dataclass(frozen=True)
class SubgroupClassification:
    flags: frozenset

    def __contains__(self, flag):
        return SubgroupFlag(flag) in self.flags

    def ordered(self):
        return [flag for flag in SubgroupFlag if flag in self.flags]

    def to_dict(self):
        return {"flags": [flag.value for flag in self.ordered()]}


def _as_element(M, tol=None):
    if isinstance(M, GroupElement):
        return M
    return GroupElement.from_matrix(M, tol)


def classify(M, tol=None):
    tol = get_setting("QHT_CLASSIFY_TOLERANCE", tol)
    element = _as_element(M, tol)

    def close(x, y):
        return abs(x - y) <= tol

    flags = {SubgroupFlag.GENERAL_X}
    if close(element.t_z, 0) and close(element.t_zeta, 0):
        flags.add(SubgroupFlag.MOEBIUS)
    if close(element.a, 1) and close(element.d, 1):
        if close(element.c, 0):
            flags.add(SubgroupFlag.HEISENBERG)
        if close(element.b, 0):
            flags.add(SubgroupFlag.HEISENBERG_TILDE)
    if close(element.d, element.a.conjugate()) and close(element.b, -element.c.conjugate()):
        flags.add(SubgroupFlag.QHT)
    if close(element.determinant, 1):
        flags.add(SubgroupFlag.UNIMODULAR)
    classification = SubgroupClassification(frozenset(flags))
    logger.debug("Classified %s as %s", element, classification.ordered())
    return classification


def act(M, v):
    """``(z, zeta) -> (a z + b zeta + t_z, c z + d zeta + t_zeta)``."""
    M = _as_element(M)
    z, zeta = complex(v.z), complex(v.zeta)
    return SymplecticPair(
        M.a * z + M.b * zeta + M.t_z,
        M.c * z + M.d * zeta + M.t_zeta,
    )


def m_map(p):
    return Quaternion.from_symplectic(SymplecticPair(complex(p.z), complex(p.zeta)))


def compose(M1, M2):
    product = _as_element(M1).to_matrix().dot(_as_element(M2).to_matrix())
    # bottom row re-normalized rather than trusted to rounding
    product[2] = (0, 0, 1)
    return GroupElement.from_matrix(product)


def invert(M, tol=None):
    M = _as_element(M)
    tol = get_setting("QHT_DEGENERACY_TOLERANCE", tol)
    scale = abs(M.a * M.d) + abs(M.b * M.c) + 1
    if abs(M.determinant) < tol * scale:
        raise SingularElement(f"Block determinant {M.determinant} vanishes.")
    det = M.determinant
    a, b, c, d = M.d / det, -M.b / det, -M.c / det, M.a / det
    return GroupElement(
        a,
        b,
        c,
        d,
        -(a * M.t_z + b * M.t_zeta),
        -(c * M.t_z + d * M.t_zeta),
    )


def from_qht(u, v):
    """QHT matrix of ``q -> q u + v``: block ``[[alpha, -conj(beta)], [beta, conj(alpha)]]``."""
    u_pair = u.to_floating().symplectic_split()
    v_pair = v.to_floating().symplectic_split()
    alpha, beta = u_pair.z, u_pair.zeta
    return GroupElement(
        alpha,
        -beta.conjugate(),
        beta,
        alpha.conjugate(),
        v_pair.z,
        v_pair.zeta,
    )


def to_qht(M, tol=None):
    """Inverse of ``from_qht``: ``u = a + c j``, ``v = t_z + t_zeta j``."""
    M = _as_element(M, tol)
    if SubgroupFlag.QHT not in classify(M, tol):
        raise NotQhtForm(f"{M} does not have the QHT block structure.")
    u = Quaternion.from_symplectic(SymplecticPair(M.a, M.c))
    v = Quaternion.from_symplectic(SymplecticPair(M.t_z, M.t_zeta))
    return u, v
