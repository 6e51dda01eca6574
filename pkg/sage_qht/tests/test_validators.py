# tests/test_validators.py

from fractions import Fraction

import numpy as np
import pytest
from django.core.exceptions import ValidationError

from sage_qht.crossratio import INFINITY
from sage_qht.helpers.validators import (
    QuaternionExpressionValidator,
    load_json,
    parse_complex,
    parse_expression,
    parse_matrix,
    parse_quaternion,
    parse_real,
    parse_scalar,
    parse_transform,
)
from sage_qht.scalars import Quaternion
from sage_qht.scalars.quaternion import I, J, K

HUGE = 10**400


class TestQuaternionExpression:
    """Parsing polynomial expressions in q and qbar."""

    @pytest.mark.parametrize(
        "source, q, expected",
        [
            ("q*i + j", J, Quaternion.exact(0, 0, 1, -1)),
            ("i*q", J, K),
            ("qbar", Quaternion.exact(1, 2, 3, 4), Quaternion.exact(1, -2, -3, -4)),
            ("(q + 1)^2", I, Quaternion.exact(0, 2)),
            ("-q^2", I, Quaternion.exact(1)),
            ("1/2*q - 3", K, Quaternion.exact(-3, 0, 0, "1/2")),
            ("2.5", I, Quaternion.exact("5/2")),
            ("q^0", I, Quaternion.exact(1)),
        ],
    )
    def test_evaluate(self, source, q, expected):
        """Test that parsed expressions evaluate exactly."""
        assert parse_expression(source)(q) == expected

    def test_products_keep_their_order(self):
        """Test that q*j and j*q stay distinct."""
        assert parse_expression("q*j")(I) == K
        assert parse_expression("j*q")(I) == -K

    def test_str_is_the_source(self):
        """Test that str returns the source text."""
        assert str(parse_expression("q * i")) == "q * i"

    @pytest.mark.parametrize(
        "source, position",
        [
            ("q * $", 4),
            ("q +", 3),
            ("(q + i", 6),
            ("q^i", 2),
            ("q q", 2),
            ("1/0", 0),
            ("", 0),
        ],
    )
    def test_errors_report_a_position(self, source, position):
        """Test that every syntax error carries its character position."""
        with pytest.raises(ValidationError) as exc_info:
            parse_expression(source)
        error = exc_info.value
        assert error.code == "invalid_expression"
        assert error.params["position"] == position

    def test_validator(self):
        """Test the validator wrapper accepts valid and rejects invalid input."""
        validator = QuaternionExpressionValidator()
        validator("q*i + j")
        with pytest.raises(ValidationError):
            validator("q**2")


class TestPayloads:
    """JSON payloads for quaternions, transforms and matrices."""

    def test_load_json(self):
        """Test loading a JSON object."""
        assert load_json('{"x0": 1}') == {"x0": 1}

    def test_malformed_json(self):
        """Test that broken JSON raises invalid_json."""
        with pytest.raises(ValidationError) as exc_info:
            load_json("{x0: 1")
        assert exc_info.value.code == "invalid_json"

    @pytest.mark.parametrize(
        "value, expected",
        [(3, Fraction(3)), ("1/2", Fraction(1, 2)), (" 0.25 ", Fraction(1, 4)), (0.5, 0.5)],
    )
    def test_parse_scalar(self, value, expected):
        """Test integers and strings become exact, floats stay floating."""
        assert parse_scalar(value) == expected

    def test_json_floats_stay_floating(self):
        """Test that JSON floats are not made exact."""
        assert isinstance(parse_scalar(0.5), float)

    @pytest.mark.parametrize(
        "value", [True, None, "abc", "1/0", [1], float("nan"), float("inf"), "nan"]
    )
    def test_invalid_scalar(self, value):
        """Test that non-numbers and non-finite floats raise invalid_scalar."""
        with pytest.raises(ValidationError) as exc_info:
            parse_scalar(value)
        assert exc_info.value.code == "invalid_scalar"

    def test_parse_real(self):
        """Test that an exact string becomes a float."""
        assert parse_real("1/4") == 0.25

    @pytest.mark.parametrize("value", [HUGE, str(HUGE), -HUGE, float("-inf")])
    def test_real_out_of_range(self, value):
        """Test that scalars beyond a double raise invalid_scalar."""
        with pytest.raises(ValidationError) as exc_info:
            parse_real(value)
        assert exc_info.value.code == "invalid_scalar"

    def test_large_exact_quaternion_is_kept(self):
        """Test that exact quaternions accept integers of any size."""
        assert parse_quaternion({"x0": HUGE}).x0 == HUGE

    def test_parse_quaternion_object(self):
        """Test the x0..x3 object form with missing keys read as zero."""
        q = parse_quaternion({"x0": "1/2", "x3": -1})
        assert q == Quaternion.exact("1/2", 0, 0, -1)
        assert q.is_exact

    def test_parse_quaternion_list(self):
        """Test the four-component list form."""
        assert parse_quaternion([0, 1, 0, 0]) == I

    def test_parse_quaternion_text(self):
        """Test a quaternion given as JSON text."""
        assert parse_quaternion('{"x2": 1}') == J

    @pytest.mark.parametrize("payload", [{"x4": 1}, [1, 2, 3], "[1, 2]", 7])
    def test_invalid_quaternion(self, payload):
        """Test that malformed quaternion payloads raise invalid_quaternion."""
        with pytest.raises(ValidationError) as exc_info:
            parse_quaternion(payload)
        assert exc_info.value.code == "invalid_quaternion"

    def test_parse_transform(self):
        """Test the u/v transform object."""
        transform = parse_transform({"u": {"x1": 1}, "v": {"x2": 1}})
        assert transform.u == I
        assert transform.v == J

    @pytest.mark.parametrize("payload", [{"u": {"x1": 1}}, [], {"u": {}, "v": {}, "w": {}}])
    def test_invalid_transform(self, payload):
        """Test that a transform needs exactly the keys u and v."""
        with pytest.raises(ValidationError) as exc_info:
            parse_transform(payload)
        assert exc_info.value.code == "invalid_transform"

    @pytest.mark.parametrize(
        "value, expected", [([1, -2], 1 - 2j), (3, 3 + 0j), (["1/2", 0], 0.5 + 0j)]
    )
    def test_parse_complex(self, value, expected):
        """Test pairs, plain numbers and exact strings as complex numbers."""
        assert parse_complex(value).value == expected

    def test_parse_infinity(self):
        """Test that "inf" is the point at infinity."""
        assert parse_complex("inf") is INFINITY

    def test_invalid_complex(self):
        """Test that an object is not a complex number."""
        with pytest.raises(ValidationError) as exc_info:
            parse_complex({"re": 1})
        assert exc_info.value.code == "invalid_complex"

    @pytest.mark.parametrize(
        "value", [float("nan"), float("inf"), HUGE, [float("nan"), 0], [0, HUGE]]
    )
    def test_non_finite_complex(self, value):
        """Test that NaN, infinite and overflowing parts raise invalid_scalar."""
        with pytest.raises(ValidationError) as exc_info:
            parse_complex(value)
        assert exc_info.value.code == "invalid_scalar"

    def test_parse_matrix(self):
        """Test that rows of pairs and numbers give a complex array."""
        matrix = parse_matrix({"rows": [[[0, 1], 0, 0], [0, [0, -1], 1], [0, 0, 1]]})
        np.testing.assert_allclose(matrix, [[1j, 0, 0], [0, -1j, 1], [0, 0, 1]])

    @pytest.mark.parametrize(
        "payload",
        [
            {"rows": [[1, 0], [0, 1]]},
            {"columns": []},
            {"rows": [[1, 0, 0], [0, 1, 0], [0, 0, "inf"]]},
        ],
    )
    def test_invalid_matrix(self, payload):
        """Test that wrong shapes and infinite entries raise invalid_matrix."""
        with pytest.raises(ValidationError) as exc_info:
            parse_matrix(payload)
        assert exc_info.value.code == "invalid_matrix"

    @pytest.mark.parametrize(
        "text",
        [
            '{"rows": [[NaN, 0, 0], [0, 1, 0], [0, 0, 1]]}',
            '{"rows": [[Infinity, 0, 0], [0, 1, 0], [0, 0, 1]]}',
            '{"rows": [[1, 0, 0], [0, 1, 0], [0, 0, %d]]}' % HUGE,
        ],
    )
    def test_matrix_text_with_non_finite_entries(self, text):
        """Test that JSON NaN, Infinity and huge integers are validation errors."""
        with pytest.raises(ValidationError) as exc_info:
            parse_matrix(load_json(text))
        assert exc_info.value.code == "invalid_scalar"
