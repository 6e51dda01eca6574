from dataclasses import dataclass

from sage_qht.scalars.quaternion import Quaternion


@dataclass(frozen=True)
class AffineFunction:
    """``F(q) = q a + b``; ``a`` multiplies from the right."""

    a: Quaternion
    b: Quaternion

    def __call__(self, q):
        return q * self.a + self.b

    def to_dict(self):
        return {"a": self.a.to_dict(), "b": self.b.to_dict()}


def affine_eval(f, q):
    return f(q)
