from fractions import Fraction

import pytest
from hypothesis import given, settings

from boundring.dsl import SetSyntaxError, format_set, parse_set, set_from_json, set_to_json
from boundring.setmodel import MonomialConstraint, SignRegime

from support import valid_sets


def test_parse_full_example():
    s = parse_set(
        """
        # the T set
        vars x, y;
        set T = { |x| <= 1 and |x*y| <= 1 };
        """
    )
    assert s.name == "T" and s.variables == ("x", "y")
    assert s.tentacles[0].constraints == (
        MonomialConstraint((1, 0), (0, 0), 1),
        MonomialConstraint((1, 1), (0, 0), 1),
    )


def test_rhs_forms():
    s = parse_set("vars x, y; set A = { |x^2| <= 3/2*|y| and |y| ≤ |x| and |x| < 2 };")
    c1, c2, c3 = s.tentacles[0].constraints
    assert (c1.alpha, c1.beta, c1.bound) == ((2, 0), (0, 1), Fraction(3, 2))
    assert (c2.alpha, c2.beta, c2.bound) == ((0, 1), (1, 0), 1)
    assert c3.bound == 2


def test_defaults_and_regime():
    s = parse_set("regime positive; set A = { |x| <= 1 } or {};", n=2)
    assert s.variables == ("x", "y")
    assert len(s.tentacles) == 2 and s.tentacles[1].constraints == ()
    assert s.tentacles[0].sign_regime == SignRegime.POSITIVE


@pytest.mark.parametrize(
    "text, line, col",
    [
        ("vars x, y;\nset A = { |z| <= 1 };", 2, 12),
        ("vars x, y; set A = { |x| <= 0 };", 1, 29),
        ("vars x, y; set A = { |x| >= 1 };", 1, 26),
        ("vars x, y; set A = { |x^0| <= 1 };", 1, 25),
        ("vars x, x; set A = {};", 1, 9),
        ("vars x, y; set A = {} extra", 1, 23),
        ("vars x, y; set A = { |x| <= 1 }", 1, 32),
    ],
)
def test_syntax_errors(text, line, col):
    with pytest.raises(SetSyntaxError) as info:
        parse_set(text)
    assert (info.value.line, info.value.col) == (line, col)


def test_variable_count_mismatch():
    with pytest.raises(SetSyntaxError):
        parse_set("vars x, y; set A = {};", n=3)


@settings(max_examples=100, deadline=None)
@given(valid_sets())
def test_text_round_trip(s):
    assert parse_set(format_set(s)) == s


@settings(max_examples=100, deadline=None)
@given(valid_sets())
def test_json_round_trip(s):
    data = set_to_json(s)
    assert set_from_json(data) == s
    assert parse_set(data["text"]) == s
