from fractions import Fraction
from numbers import Rational

from sympy.polys.domains import QQ, QQ_I


def _to_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational, float)):
        return Fraction(value)
    raise TypeError(f"Cannot use {type(value).__name__} as an exact rational.")


def _to_qq(value):
    value = _to_fraction(value)
    return QQ(value.numerator, value.denominator)


def _from_qq(value):
    return Fraction(int(value.numerator), int(value.denominator))


class GaussianRational:
    """
    Exact complex number ``re + im*i`` backed by an element of sympy's
    ``QQ_I``.

    Behaves like ``complex`` (``real``, ``imag``, ``conjugate()``) so code
    written for floating complex values also runs on exact ones.
    """

    __slots__ = ("element",)

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "element", QQ_I(_to_qq(re), _to_qq(im)))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable.")

    @classmethod
    def from_element(cls, element):
        """Wrap a ``QQ_I`` element."""
        value = cls.__new__(cls)
        object.__setattr__(value, "element", QQ_I.convert(element))
        return value

    @classmethod
    def coerce(cls, value):
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        if isinstance(value, QQ_I.dtype):
            return cls.from_element(value)
        return cls(value)

    @classmethod
    def from_string(cls, text):
        """Parse ``"3"``, ``"-1/2"``, ``"2i"``, ``"-i"`` or ``"1/2+3i"``."""
        body = text.replace(" ", "")
        if not body:
            raise ValueError("Empty Gaussian rational.")
        try:
            if not body.endswith("i"):
                return cls(Fraction(body))
            body = body[:-1].rstrip("*")
            split = max(body.rfind("+", 1), body.rfind("-", 1))
            if split > 0:
                real_text, imag_text = body[:split], body[split:]
            else:
                real_text, imag_text = "0", body
            if imag_text in ("", "+"):
                imag_text = "1"
            elif imag_text == "-":
                imag_text = "-1"
            return cls(Fraction(real_text), Fraction(imag_text))
        except (ValueError, ZeroDivisionError) as error:
            raise ValueError(f"Invalid Gaussian rational: {text!r}") from error

    @property
    def re(self):
        return _from_qq(self.element.x)

    @property
    def im(self):
        return _from_qq(self.element.y)

    real = re
    imag = im

    def conjugate(self):
        return GaussianRational.from_element(QQ_I(self.element.x, -self.element.y))

    def abs2(self):
        return self.re * self.re + self.im * self.im

    def is_zero(self):
        return self.element == QQ_I.zero

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __neg__(self):
        return GaussianRational.from_element(-self.element)

    def __pos__(self):
        return self

    def _binary(self, other, operation):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational.from_element(operation(self.element, other.element))

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binary(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("Division by the zero Gaussian rational.")
        return GaussianRational.from_element(QQ_I.quo(self.element, other.element))

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __eq__(self, other):
        if isinstance(other, (GaussianRational, int, Fraction, complex)):
            return self.element == GaussianRational.coerce(other).element
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __str__(self):
        re, im = self.re, self.im
        if im == 0:
            return str(re)
        if im == 1:
            imag = "i"
        elif im == -1:
            imag = "-i"
        else:
            imag = f"{im}i"
        if re == 0:
            return imag
        sign = "" if imag.startswith("-") else "+"
        return f"{re}{sign}{imag}"

    def __repr__(self):
        return f"GaussianRational({self})"


I = GaussianRational(0, 1)
ONE = GaussianRational(1)
ZERO = GaussianRational(0)
