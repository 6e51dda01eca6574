import cmath
import logging
from dataclasses import dataclass

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtendedComplex:
    """A point of the extended plane; ``value is None`` tags infinity."""

    value: complex = None

    def __post_init__(self):
        if self.value is not None:
            value = complex(self.value)
            if cmath.isinf(value) or cmath.isnan(value):
                logger.debug("Rejected non-finite point %r", value)
                raise ValueError(f"Use INFINITY instead of {value!r}.")
            object.__setattr__(self, "value", value)

    @classmethod
    def coerce(cls, point):
        if isinstance(point, ExtendedComplex):
            return point
        if isinstance(point, str) and point.strip().lower() == "inf":
            return INFINITY
        return cls(complex(point))

    @property
    def is_infinite(self):
        return self.value is None

    def is_close(self, other, tol=1e-12):
        other = ExtendedComplex.coerce(other)
        if self.is_infinite or other.is_infinite:
            return self.is_infinite and other.is_infinite
        return abs(self.value - other.value) <= tol * max(1.0, abs(other.value))

    def to_json(self):
        if self.is_infinite:
            return "inf"
        return [self.value.real, self.value.imag]

    def __str__(self):
        return "inf" if self.is_infinite else str(self.value)


INFINITY = ExtendedComplex()
