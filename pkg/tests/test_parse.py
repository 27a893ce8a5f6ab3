from fractions import Fraction

import pytest
from hypothesis import given

from conftest import polynomials
from ginwb import ParseError, Polynomial, parse_polynomial, parse_polynomials


def test_basic_forms():
    f = parse_polynomial("x1^2 + 3/2 x2 x3 - x4^2")
    assert f == Polynomial({(2, 0, 0, 0): 1, (0, 1, 1, 0): Fraction(3, 2), (0, 0, 0, 2): -1}, 4)
    assert parse_polynomial("2*x1*x2", n=3) == Polynomial({(1, 1, 0): 2}, 3)
    assert parse_polynomial("x1 x1") == parse_polynomial("x1^2")
    assert parse_polynomial("-x1 + x1", n=2).is_zero()
    assert parse_polynomial("7", n=2) == Polynomial.constant(7, 2)


def test_whitespace_insensitive():
    assert parse_polynomial("  x1 ^ 2+x2 ^2 ") == parse_polynomial("x1^2 + x2^2")
    assert parse_polynomial("3 / 4 x1") == parse_polynomial("3/4x1")


@given(polynomials())
def test_printed_form_round_trips(f):
    assert parse_polynomial(str(f), n=f.n) == f


def test_lists():
    fs = parse_polynomials("x1^2; x2^2\n# comment\nx3^2  # trailing\n\n")
    assert len(fs) == 3 and all(f.n == 3 for f in fs)
    assert parse_polynomials("x1^2", n=4)[0].n == 4


@pytest.mark.parametrize(
    "text,line,column",
    [
        ("x1^2 +", 1, 7),
        ("x1^2 + y2", 1, 8),
        ("x1^", 1, 4),
        ("x0^2", 1, 2),
        ("x1^2 ++ x2^2", 1, 7),
        ("1/0 x1", 1, 3),
        ("x1^2;\nx2^2 ) ", 2, 6),
    ],
)
def test_errors_cite_position(text, line, column):
    with pytest.raises(ParseError) as err:
        parse_polynomials(text)
    assert (err.value.line, err.value.column) == (line, column)
    assert f"line {line}, column {column}" in str(err.value)


def test_variable_outside_ring():
    with pytest.raises(ParseError):
        parse_polynomials("x1^2; x5^2", n=4)


def test_non_homogeneous_rejected():
    with pytest.raises(ParseError) as err:
        parse_polynomials("x1^2; x2^2 + x3", homogeneous=True)
    assert err.value.line == 1
    assert parse_polynomials("x1^2 + x2", homogeneous=False)


def test_empty_and_zero_rejected():
    with pytest.raises(ParseError):
        parse_polynomials(" ; \n")
    with pytest.raises(ParseError):
        parse_polynomials("x1 - x1")
