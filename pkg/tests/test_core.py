from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from inclab.core import (IDENTICAL, DomainError, InputError, Line, Point,
                         format_rational, line_compose, line_eval,
                         line_intersection, line_inverse, line_quotient,
                         make_rational, parse_rational)

IDENTITY = Line(1, 0)


def test_make_rational_canonicalizes():
    assert make_rational(6, 4) == Fraction(3, 2)
    assert make_rational(3, -6) == Fraction(-1, 2)
    assert make_rational(0, 7) == Fraction(0, 1)
    assert make_rational(0, 7).denominator == 1


def test_make_rational_rejects_zero_denominator():
    with pytest.raises(InputError):
        make_rational(1, 0)


@pytest.mark.parametrize("text,value", [
    ("3", Fraction(3)),
    ("-1/2", Fraction(-1, 2)),
    ("+7/3", Fraction(7, 3)),
    (" 10/4 ", Fraction(5, 2)),
])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1/0", "1.5", "1/-2", "", "a/b", "1 / 2"])
def test_parse_rational_rejects(text):
    with pytest.raises(InputError):
        parse_rational(text)


def test_format_rational_omits_unit_denominator():
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert parse_rational(format_rational(Fraction(22, 7))) == Fraction(22, 7)


def test_compose_worked_example():
    assert line_compose(Line(2, 3), Line(2, 4)) == Line(4, 11)
    assert line_compose(Line(2, 4), Line(2, 3)) == Line(4, 10)


def test_compose_identity():
    g = Line(Fraction(5, 7), Fraction(-2, 3))
    assert line_compose(IDENTITY, g) == g
    assert line_compose(g, IDENTITY) == g


def test_compose_is_noncommutative():
    assert line_compose(Line(2, 3), Line(2, 4)) != line_compose(Line(2, 4), Line(2, 3))


def test_inverse():
    assert line_inverse(IDENTITY) == IDENTITY
    assert line_inverse(Line(2, 3)) == Line(Fraction(1, 2), Fraction(-3, 2))
    # slope -1 lines are involutions
    g = Line(-1, 5)
    assert line_inverse(g) == g
    assert line_compose(g, g) == IDENTITY


def test_quotient():
    assert line_quotient(Line(2, 3), Line(4, 11)) == Line(2, 4)
    assert line_quotient(Line(5, 7), Line(5, 7)) == IDENTITY
    assert line_quotient(IDENTITY, Line(3, 2)) == Line(3, 2)


def test_group_ops_reject_horizontal():
    flat = Line(0, 3)
    for op in (lambda: line_compose(flat, IDENTITY),
               lambda: line_compose(IDENTITY, flat),
               lambda: line_inverse(flat),
               lambda: line_quotient(flat, IDENTITY),
               lambda: line_quotient(IDENTITY, flat)):
        with pytest.raises(DomainError):
            op()


def test_line_eval():
    assert line_eval(Line(2, 3), 4) == 11
    assert line_eval(Line(Fraction(1, 2), 0), 3) == Fraction(3, 2)
    assert line_eval(Line(-1, 1), 1) == 0


def test_line_intersection():
    assert line_intersection(Line(1, 0), Line(-1, 2)) == Point(1, 1)
    assert line_intersection(Line(1, 0), Line(1, 1)) is None
    assert line_intersection(Line(2, 1), Line(2, 1)) == IDENTICAL


def test_hash_agrees_with_equality():
    assert hash(make_rational(2, 4)) == hash(Fraction(1, 2))
    assert Line(Fraction(2, 4), Fraction(6, 2)) == Line(Fraction(1, 2), 3)
    assert len({Line(1, 2), Line(Fraction(2, 2), Fraction(4, 2))}) == 1


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
slopes = rationals.filter(lambda q: q != 0)
lines = st.builds(Line, slopes, rationals)


@given(lines, lines, lines)
@settings(max_examples=200)
def test_associativity(f, g, h):
    assert line_compose(line_compose(f, g), h) == line_compose(f, line_compose(g, h))


@given(lines)
@settings(max_examples=200)
def test_inverse_composes_to_identity(g):
    assert line_compose(g, line_inverse(g)) == IDENTITY
    assert line_compose(line_inverse(g), g) == IDENTITY


@given(lines, lines)
@settings(max_examples=200)
def test_quotient_matches_inverse_compose(g, h):
    assert line_quotient(g, h) == line_compose(line_inverse(g), h)


@given(lines, lines)
@settings(max_examples=100)
def test_intersection_lies_on_both(g, h):
    p = line_intersection(g, h)
    if isinstance(p, Point):
        assert line_eval(g, p.x) == p.y
        assert line_eval(h, p.x) == p.y
