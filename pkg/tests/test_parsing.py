import pytest
from hypothesis import given

from supermaps.parsing import ParseError, format_poly, infer_ring, parse_poly
from supermaps.superring import RingSpec

from .strategies import RING, polys


@pytest.mark.parametrize(
    "text,expected",
    [
        ("x + t1*t2", "t1*t2 + x"),
        ("t2*t1", "-t1*t2"),
        ("2x^2 y", "2*x^2*y"),
        ("1/2*x - 1/2*x", "0"),
        ("(x + t1)^2", "x^2 + 2*x*t1"),
        ("-(t1 - y)", "y - t1"),
        ("3", "3"),
        ("x*t1*t1", "0"),
    ],
)
def test_canonical_printing(text, expected):
    assert str(parse_poly(text)) == expected


def test_ring_inference_orders_names():
    ring = infer_ring(["t10 + t2*x3", "x1 + b"])
    assert ring == RingSpec(("b", "x1", "x3"), ("t2", "t10"))


@pytest.mark.parametrize(
    "text,col",
    [("x + ", 4), ("x $ y", 3), ("t1^2", 1), ("(x + y", 7), ("2/0", 3), ("x ^ y", 5)],
)
def test_errors_carry_position(text, col):
    with pytest.raises(ParseError) as info:
        parse_poly(text)
    assert info.value.line == 1
    assert info.value.column == col


def test_unknown_variable_for_explicit_ring():
    with pytest.raises(ParseError, match="unknown variable 'z'"):
        parse_poly("z", RingSpec(("x",), ()))


@given(polys())
def test_round_trip(p):
    text = format_poly(p)
    assert parse_poly(text, RING) == p
    assert format_poly(parse_poly(text, RING)) == text
