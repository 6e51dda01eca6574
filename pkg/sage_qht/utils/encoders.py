import json
from enum import Enum
from fractions import Fraction

import numpy as np
from django.core.serializers.json import DjangoJSONEncoder

from sage_qht.scalars.gaussian import GaussianRational


class QhtJSONEncoder(DjangoJSONEncoder):
    """
    JSON encoder for the library's value types.

    Objects exposing ``to_dict()`` serialize through it; exact scalars keep
    their ``p/q`` text form.
    """

    def default(self, o):
        if hasattr(o, "to_json"):
            return o.to_json()
        if hasattr(o, "to_dict"):
            return o.to_dict()
        if isinstance(o, Fraction):
            return str(o)
        if isinstance(o, GaussianRational):
            return str(o)
        if isinstance(o, complex):
            return [o.real, o.imag]
        if isinstance(o, Enum):
            return o.value
        if isinstance(o, np.generic):
            return self.default(o.item()) if isinstance(o.item(), complex) else o.item()
        if isinstance(o, np.ndarray):
            return o.tolist()
        return super().default(o)


def dumps(payload):
    """Deterministic JSON text: sorted keys and fixed indentation."""
    return json.dumps(payload, cls=QhtJSONEncoder, sort_keys=True, indent=2)
