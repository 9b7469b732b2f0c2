"""Wire format tests."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kirwanlab.bdc import global_bdc
from kirwanlab.errors import ParseError, SpecValidationError
from kirwanlab.hamspace import make_spec
from kirwanlab.serialization import (
    bdc_class_from_json,
    bdc_class_to_json,
    format_fraction,
    parse_fraction,
    parse_poly_expr,
    poly_from_json,
    poly_to_json,
    poly_to_string,
    spec_from_json,
    spec_to_json,
)

F = Fraction


@given(st.fractions(min_value=-10**9, max_value=10**9, max_denominator=10**6))
@settings(max_examples=200, deadline=None)
def test_fraction_roundtrip(x):
    assert parse_fraction(format_fraction(x)) == x


def test_fraction_grammar():
    assert format_fraction(F(3, 4)) == "3/4"
    assert format_fraction(F(5)) == "5"
    assert format_fraction(F(-7, 2)) == "-7/2"
    assert parse_fraction("-6/4") == F(-3, 2)
    for bad in ["1.5", "a", "1/2/3", "--1", "1e3"]:
        with pytest.raises(ParseError):
            parse_fraction(bad)


def test_poly_roundtrip():
    p = {(2, 0): F(1), (0, 1): F(-3, 2)}
    assert poly_from_json(poly_to_json(p), 2) == p


def test_poly_from_json_validates():
    with pytest.raises(ParseError):
        poly_from_json([{"exponents": [1], "coeff": "1"}], 2)
    with pytest.raises(ParseError):
        poly_from_json([{"exponents": [1, -1], "coeff": "1"}], 2)
    with pytest.raises(ParseError):
        poly_from_json([{"exponents": [1, 0], "coeff": "0.5"}], 2)


def test_expression_parser():
    vars2 = ("t", "x")
    assert parse_poly_expr("t^2*x", vars2) == {(2, 1): F(1)}
    assert parse_poly_expr("3/2*t - x^2 + 1", vars2) == {
        (1, 0): F(3, 2),
        (0, 2): F(-1),
        (0, 0): F(1),
    }
    assert parse_poly_expr("x0^2", vars2) == {(0, 2): F(1)}  # alias for x
    assert parse_poly_expr("-t + t", vars2) == {}
    assert parse_poly_expr("2*3*t", vars2) == {(1, 0): F(6)}
    vars4 = ("t", "x0", "x1", "x2")
    assert parse_poly_expr("x0*x1 - x2^2", vars4) == {
        (0, 1, 1, 0): F(1),
        (0, 0, 0, 2): F(-1),
    }
    for bad in ["t +", "* t", "y", "t^x", "t^^2", "4 t"]:
        with pytest.raises(ParseError):
            parse_poly_expr(bad, vars2)


def test_poly_to_string():
    vars2 = ("t", "x")
    assert poly_to_string({}, vars2) == "0"
    assert poly_to_string({(1, 0): F(1), (0, 1): F(-1, 2)}, vars2) == "t - 1/2*x"
    assert poly_to_string({(0, 0): F(-3)}, vars2) == "-3"


def test_spec_roundtrip_and_errors():
    spec = make_spec([(1, [0, 1]), (2, [3, -1, 2])])
    assert spec_from_json(spec_to_json(spec)) == spec
    with pytest.raises(SpecValidationError):
        spec_from_json({"factors": [{"n": 1}]})
    with pytest.raises(SpecValidationError):
        spec_from_json({})


def test_class_file_roundtrip():
    spec = make_spec([(2, [0, 1, 3])])
    beta = global_bdc(spec).representative()
    data = bdc_class_to_json(beta)
    back = bdc_class_from_json(data)
    assert back.m == beta.m
    assert back.bases == beta.bases
    assert back.blocks == beta.blocks
