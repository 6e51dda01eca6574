import re
from dataclasses import dataclass
from fractions import Fraction

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from sage_qht.scalars.quaternion import Quaternion

_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+/\d+|\d+(?:\.\d+)?)|(?P<name>qbar|q|i|j|k)|(?P<op>[-+*^()]))"
)

_UNITS = {
    "i": Quaternion.exact(0, 1),
    "j": Quaternion.exact(0, 0, 1),
    "k": Quaternion.exact(0, 0, 0, 1),
}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def _error(message, position):
    return ValidationError(
        _("%(message)s at position %(position)d."),
        code="invalid_expression",
        params={"message": message, "position": position},
    )


def tokenize(source):
    tokens, position = [], 0
    while position < len(source):
        if source[position:].strip() == "":
            break
        match = _TOKEN.match(source, position)
        if match is None:
            offset = len(source[position:]) - len(source[position:].lstrip())
            raise _error(f"Unexpected character {source[position + offset]!r}", position + offset)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(Token("end", "", len(source)))
    return tokens


class _Parser:
    """
    Recursive descent over ``expr := term (('+'|'-') term)*``,
    ``term := unary ('*' unary)*``, ``unary := '-' unary | power``,
    ``power := atom ('^' integer)?``. Products keep their written order.
    """

    def __init__(self, source):
        self.tokens = tokenize(source)
        self.index = 0

    @property
    def current(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.current
        self.index += 1
        return token

    def expect(self, text):
        if self.current.text != text:
            raise _error(f"Expected {text!r}", self.current.position)
        return self.advance()

    def parse(self):
        if self.current.kind == "end":
            raise _error("Empty expression", 0)
        node = self.expression()
        if self.current.kind != "end":
            raise _error(f"Unexpected {self.current.text!r}", self.current.position)
        return node

    def expression(self):
        node = self.term()
        while self.current.text in ("+", "-"):
            operator = self.advance().text
            right = self.term()
            node = _add(node, right) if operator == "+" else _sub(node, right)
        return node

    def term(self):
        node = self.unary()
        while self.current.text == "*":
            self.advance()
            node = _mul(node, self.unary())
        return node

    def unary(self):
        if self.current.text == "-":
            self.advance()
            operand = self.unary()
            return lambda q: -operand(q)
        if self.current.text == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.current.text != "^":
            return base
        self.advance()
        token = self.current
        if token.kind != "number" or not token.text.isdigit():
            raise _error("Exponent must be a non-negative integer", token.position)
        self.advance()
        return _power(base, int(token.text))

    def atom(self):
        token = self.current
        if token.kind == "number":
            self.advance()
            try:
                value = Quaternion.exact(Fraction(token.text))
            except ZeroDivisionError:
                raise _error("Zero denominator", token.position) from None
            return lambda q: value
        if token.kind == "name":
            self.advance()
            if token.text == "q":
                return lambda q: q
            if token.text == "qbar":
                return lambda q: q.conjugate()
            unit = _UNITS[token.text]
            return lambda q: unit
        if token.text == "(":
            self.advance()
            node = self.expression()
            self.expect(")")
            return node
        if token.kind == "end":
            raise _error("Unexpected end of expression", token.position)
        raise _error(f"Unexpected {token.text!r}", token.position)


def _add(left, right):
    return lambda q: left(q) + right(q)


def _sub(left, right):
    return lambda q: left(q) - right(q)


def _mul(left, right):
    return lambda q: left(q) * right(q)


def _power(base, exponent):
    def evaluate(q):
        value = base(q)
        result = Quaternion.exact(1)
        for _ in range(exponent):
            result = result * value
        return result

    return evaluate


@dataclass(frozen=True)
class QuaternionExpression:
    """A compiled polynomial expression in ``q`` and ``qbar``."""

    source: str
    function: object

    def __call__(self, q):
        return self.function(q)

    def __str__(self):
        return self.source


def parse_expression(source):
    return QuaternionExpression(source, _Parser(source).parse())


class QuaternionExpressionValidator:
    """Reject text that does not parse as a quaternion polynomial."""

    def __call__(self, value):
        parse_expression(value)
