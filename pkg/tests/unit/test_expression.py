"""Tests for the polynomial expression parser."""

import pytest

from errors import InvalidArgumentError, PolySyntaxError
from expression import PolyExpr, parse_poly
from polyalg import IntPoly


def test_parse_pure_sixty(pure):
    """Test x^60 - m with and without spaces."""
    assert parse_poly("x^60-67") == pure(67)
    assert parse_poly(" x ^ 60 + 3 ") == pure(-3)


def test_parse_shifted_power():
    """Test (x-4)^60 - 26^31 expands exactly."""
    F = parse_poly("(x-4)^60-26^31")
    assert F.degree == 60
    assert F[0] == 4 ** 60 - 26 ** 31
    assert F[59] == -240


def test_implicit_multiplication(x):
    """Test juxtaposition multiplies."""
    assert parse_poly("2x") == 2 * x
    assert parse_poly("(x+1)(x-1)") == x ** 2 - 1
    assert parse_poly("3(x+1)^2") == 3 * x ** 2 + 6 * x + 3


def test_unary_signs(x):
    """Test '^' binds tighter than unary minus."""
    assert parse_poly("-x^2") == -(x ** 2)
    assert parse_poly("--x") == x
    assert parse_poly("+x-1") == x - 1


def test_constant_powers():
    """Test integer powers of constants and x^0."""
    assert parse_poly("2^10") == IntPoly((1024,))
    assert parse_poly("x^0") == IntPoly((1,))


@pytest.mark.parametrize("F", [
    IntPoly((-20, 20)),
    IntPoly((1, 1, 1)),
    IntPoly((-1, 0, -1)),
    IntPoly((-8, -2, -1, 1)),
])
def test_canonical_text_parses_back(F):
    """Test str(F) parses back to F."""
    expr = PolyExpr.parse(str(F))
    assert expr.parsed == F
    assert expr.canonical == str(F)


@pytest.mark.parametrize("text,position", [
    ("x^", 2),
    ("x + y", 4),
    ("x^1.5", 3),
    ("x^-1", 2),
    ("", 0),
    ("(x+1", 4),
    ("x)", 1),
])
def test_syntax_error_positions(text, position):
    """Test the reported position of syntax errors."""
    with pytest.raises(PolySyntaxError) as excinfo:
        parse_poly(text)
    assert excinfo.value.position == position


def test_message_points_at_the_error():
    """Test the caret line under the input."""
    with pytest.raises(PolySyntaxError) as excinfo:
        parse_poly("x + y")
    message = str(excinfo.value)
    assert "at position 4" in message
    assert message.endswith("x + y\n      ^")


def test_syntax_errors_are_invalid_arguments():
    """Test syntax errors belong to the invalid-input family."""
    with pytest.raises(InvalidArgumentError):
        parse_poly("x^")


def test_degree_limit_on_powers(mocker):
    """Test the degree limit on a single power."""
    mocker.patch("expression.MAX_DEGREE", 10)
    assert parse_poly("x^10").degree == 10
    with pytest.raises(PolySyntaxError):
        parse_poly("x^11")


def test_degree_limit_on_products(mocker):
    """Test the degree limit on the expanded result."""
    mocker.patch("expression.MAX_DEGREE", 10)
    with pytest.raises(InvalidArgumentError):
        parse_poly("x^5*x^6")


def test_exponent_limit_on_constants(mocker):
    """Test the exponent limit on constant powers."""
    mocker.patch("expression.MAX_EXPONENT", 100)
    with pytest.raises(PolySyntaxError):
        parse_poly("2^101")


def test_nested_constant_powers_are_bounded():
    """Test towers of constant powers stop before expanding."""
    with pytest.raises(PolySyntaxError) as excinfo:
        parse_poly("((2^4096)^4096)^4096")
    assert excinfo.value.position == 9
    assert parse_poly("2^4096") == IntPoly((2 ** 4096,))


def test_coefficient_limit_on_polynomial_powers(mocker):
    """Test large coefficients raised to a power are bounded too."""
    mocker.patch("expression.MAX_COEFF_BITS", 100)
    assert parse_poly("(x+1000)^10").degree == 10
    with pytest.raises(PolySyntaxError):
        parse_poly("(x+1000)^11")
