import json
import math
from fractions import Fraction

import numpy as np
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from sage_qht.crossratio.extended import ExtendedComplex
from sage_qht.qht.transform import QhtTransform
from sage_qht.scalars.quaternion import Quaternion

COMPONENTS = ("x0", "x1", "x2", "x3")


def load_json(text):
    try:
        return json.loads(text)
    except (TypeError, ValueError) as error:
        raise ValidationError(
            _("Malformed JSON: %(error)s"), code="invalid_json", params={"error": error}
        ) from error


def _invalid_scalar(value):
    return ValidationError(
        _("Invalid scalar %(value)r."), code="invalid_scalar", params={"value": value}
    )


def parse_scalar(value):
    """JSON numbers stay floating; strings such as ``"1/2"`` or ``"0.25"`` are exact."""
    if isinstance(value, bool):
        raise ValidationError(_("Booleans are not scalars."), code="invalid_scalar")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise _invalid_scalar(value)
        return value
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as error:
            raise _invalid_scalar(value) from error
    raise _invalid_scalar(value)


def parse_real(value):
    """A finite ``float``; exact scalars too large for a double are rejected."""
    try:
        result = float(parse_scalar(value))
    except OverflowError as error:
        raise _invalid_scalar(value) from error
    if not math.isfinite(result):
        raise _invalid_scalar(value)
    return result


def parse_quaternion(payload):
    """``{"x0": .., "x1": .., "x2": .., "x3": ..}`` (missing keys are 0) or a 4-list."""
    if isinstance(payload, str):
        payload = load_json(payload)
    if isinstance(payload, list) and len(payload) == 4:
        values = payload
    elif isinstance(payload, dict) and set(payload) <= set(COMPONENTS):
        values = [payload.get(name, 0) for name in COMPONENTS]
    else:
        raise ValidationError(
            _("Expected a quaternion object with keys x0..x3, got %(payload)r."),
            code="invalid_quaternion",
            params={"payload": payload},
        )
    return Quaternion(*(parse_scalar(value) for value in values))


def parse_transform(payload):
    if isinstance(payload, str):
        payload = load_json(payload)
    if not isinstance(payload, dict) or set(payload) != {"u", "v"}:
        raise ValidationError(
            _("Expected a transform object with keys u and v."), code="invalid_transform"
        )
    return QhtTransform(parse_quaternion(payload["u"]), parse_quaternion(payload["v"]))


def parse_complex(value):
    """``[re, im]``, a plain number, or ``"inf"``."""
    if isinstance(value, str) and value.strip().lower() == "inf":
        return ExtendedComplex.coerce("inf")
    if isinstance(value, list) and len(value) == 2:
        re_part, im_part = (parse_real(part) for part in value)
        return ExtendedComplex(complex(re_part, im_part))
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return ExtendedComplex(complex(parse_real(value)))
    raise ValidationError(
        _("Invalid complex number %(value)r."), code="invalid_complex", params={"value": value}
    )


def parse_matrix(payload):
    """``{"rows": [[[re, im], ...], ...]}`` as a 3x3 ``complex`` array."""
    if isinstance(payload, str):
        payload = load_json(payload)
    rows = payload.get("rows") if isinstance(payload, dict) else None
    if not isinstance(rows, list) or len(rows) != 3 or any(
        not isinstance(row, list) or len(row) != 3 for row in rows
    ):
        raise ValidationError(_("Expected 3x3 'rows'."), code="invalid_matrix")
    entries = []
    for row in rows:
        parsed = []
        for value in row:
            point = parse_complex(value)
            if point.is_infinite:
                raise ValidationError(_("Matrix entries must be finite."), code="invalid_matrix")
            parsed.append(point.value)
        entries.append(parsed)
    return np.array(entries, dtype=complex)
