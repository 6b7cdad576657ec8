"""Parser for integer polynomial expressions in x."""

import logging
import re
from dataclasses import dataclass
from typing import List, Optional, Tuple

try:
    from .config import MAX_COEFF_BITS, MAX_DEGREE, MAX_EXPONENT
    from .errors import InvalidArgumentError, PolySyntaxError
    from .polyalg import IntPoly
except ImportError:
    from config import MAX_COEFF_BITS, MAX_DEGREE, MAX_EXPONENT
    from errors import InvalidArgumentError, PolySyntaxError
    from polyalg import IntPoly


LOGGER = logging.getLogger(__name__)

_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|([-+*^()]))")

Token = Tuple[str, str, int]


def _tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if match is None:
            offset = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolySyntaxError(f"unexpected character {text[offset]!r}", offset, text)
        number, var, op = match.groups()
        start = match.start(match.lastindex)
        if number is not None:
            tokens.append(("int", number, start))
        elif var is not None:
            tokens.append(("x", var, start))
        else:
            tokens.append((op, op, start))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive descent; '^' binds tighter than unary minus, juxtaposition multiplies."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _error(self, message: str, token: Optional[Token] = None) -> PolySyntaxError:
        token = token or self.current
        return PolySyntaxError(message, token[2], self.text)

    def parse(self) -> IntPoly:
        if self.current[0] == "end":
            raise self._error("empty expression")
        result = self._expr()
        if self.current[0] != "end":
            raise self._error(f"unexpected {self.current[1]!r}")
        return result

    def _expr(self) -> IntPoly:
        result = self._term()
        while self.current[0] in ("+", "-"):
            op = self._advance()[0]
            rhs = self._term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def _term(self) -> IntPoly:
        result = self._unary()
        while True:
            kind = self.current[0]
            if kind == "*":
                self._advance()
                result = result * self._unary()
            elif kind in ("int", "x", "("):
                result = result * self._power()
            else:
                return result

    def _unary(self) -> IntPoly:
        kind = self.current[0]
        if kind == "-":
            self._advance()
            return -self._unary()
        if kind == "+":
            self._advance()
            return self._unary()
        return self._power()

    def _power(self) -> IntPoly:
        base = self._atom()
        if self.current[0] != "^":
            return base
        caret = self._advance()
        token = self.current
        if token[0] != "int":
            raise self._error("exponent must be a non-negative integer literal")
        self._advance()
        exponent = int(token[1])
        if base.degree > 0 and base.degree * exponent > MAX_DEGREE:
            raise self._error(f"degree {base.degree * exponent} exceeds the limit {MAX_DEGREE}", caret)
        if base.degree <= 0 and exponent > MAX_EXPONENT:
            raise self._error(f"exponent {exponent} exceeds the limit {MAX_EXPONENT}", token)
        height = max((abs(c) for c in base.coeffs), default=0)
        bits = height.bit_length() * exponent
        if bits > MAX_COEFF_BITS:
            raise self._error(f"power has coefficients of about {bits} bits, above the limit {MAX_COEFF_BITS}", caret)
        return base ** exponent

    def _atom(self) -> IntPoly:
        token = self.current
        kind = token[0]
        if kind == "int":
            self._advance()
            return IntPoly.constant(int(token[1]))
        if kind == "x":
            self._advance()
            return IntPoly.x()
        if kind == "(":
            self._advance()
            inner = self._expr()
            if self.current[0] != ")":
                raise self._error("expected ')'")
            self._advance()
            return inner
        if kind == "end":
            raise self._error("unexpected end of expression")
        raise self._error(f"unexpected {token[1]!r}")


def parse_poly(text: str) -> IntPoly:
    """Expand an expression such as "(x-4)^60 - 26^31" into an IntPoly."""
    poly = _Parser(text).parse()
    if poly.degree > MAX_DEGREE:
        raise InvalidArgumentError(f"degree {poly.degree} exceeds the limit {MAX_DEGREE}")
    LOGGER.debug("parsed %r as degree-%d polynomial", text, poly.degree)
    return poly


@dataclass(frozen=True)
class PolyExpr:
    source: str
    parsed: IntPoly

    @classmethod
    def parse(cls, text: str) -> "PolyExpr":
        return cls(text, parse_poly(text))

    @property
    def canonical(self) -> str:
        return str(self.parsed)
