"""Exact scalars, points, and lines, plus the group algebra of non-vertical lines.

Every scalar in the library is an arbitrary-precision ``fractions.Fraction``
(canonical reduced form, positive denominator, hash-compatible with exact
equality).  Lines are slope/intercept pairs ``y = c*x + d``; vertical lines
have no representation here.  Lines with nonzero slope form a non-commutative
group under composition of the associated maps ``x -> c*x + d``:

    (c, d) o (c', d') = (c*c', c*d' + d)

with identity (1, 0) and inverse (1/c, -d/c).
"""

from __future__ import annotations

import re
from collections import namedtuple
from fractions import Fraction
from typing import Union

Rational = Fraction

RationalLike = Union[Fraction, int, str]


class InputError(ValueError):
    """Malformed or out-of-range input."""


class DomainError(ValueError):
    """Operation applied outside its mathematical domain (e.g. slope 0)."""


class CapExceededError(RuntimeError):
    """A guarded brute-force routine refused an input above its size cap."""


_RATIONAL_RE = re.compile(r"[+-]?\d+(/\d+)?\Z")


def make_rational(num: int, den: int = 1) -> Fraction:
    """Canonical reduced fraction num/den with positive denominator."""
    if den == 0:
        raise InputError("rational denominator must be nonzero")
    return Fraction(num, den)


def parse_rational(text: str) -> Fraction:
    """Parse 'p' or 'p/q' (optional leading sign, q > 0)."""
    s = text.strip()
    if not _RATIONAL_RE.fullmatch(s):
        raise InputError(f"not a rational literal: {text!r}")
    if "/" in s:
        p, q = s.split("/")
        return make_rational(int(p), int(q))
    return Fraction(int(s))


def format_rational(q: RationalLike) -> str:
    """Text form 'p/q', with '/q' omitted when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Point(namedtuple("Point", ["x", "y"])):
    __slots__ = ()

    def __new__(cls, x: RationalLike, y: RationalLike):
        return super().__new__(cls, Fraction(x), Fraction(y))


class Line(namedtuple("Line", ["c", "d"])):
    """The line y = c*x + d, equivalently the dual point (c, d)."""

    __slots__ = ()

    def __new__(cls, c: RationalLike, d: RationalLike):
        return super().__new__(cls, Fraction(c), Fraction(d))


# line_intersection(g, g) returns this marker: equal lines meet everywhere.
IDENTICAL = "identical"


def _require_group_element(g: Line) -> None:
    if g.c == 0:
        raise DomainError(f"horizontal line {g} is not a group element (slope 0)")


def line_compose(g: Line, h: Line) -> Line:
    """Group composition (g.c*h.c, g.c*h.d + g.d); both slopes must be nonzero."""
    _require_group_element(g)
    _require_group_element(h)
    return Line(g.c * h.c, g.c * h.d + g.d)


def line_inverse(g: Line) -> Line:
    """Group inverse (1/c, -d/c)."""
    _require_group_element(g)
    return Line(1 / g.c, -g.d / g.c)


def line_quotient(g: Line, h: Line) -> Line:
    """inverse(g) composed with h, i.e. (h.c/g.c, (h.d - g.d)/g.c)."""
    _require_group_element(g)
    _require_group_element(h)
    return Line(h.c / g.c, (h.d - g.d) / g.c)


def line_eval(g: Line, x: RationalLike) -> Fraction:
    """Exact value c*x + d."""
    return g.c * Fraction(x) + g.d


def line_intersection(g: Line, h: Line) -> Union[Point, None, str]:
    """Intersection point, None for distinct parallels, IDENTICAL for equal lines."""
    if g == h:
        return IDENTICAL
    if g.c == h.c:
        return None
    x = (h.d - g.d) / (g.c - h.c)
    return Point(x, line_eval(g, x))


IDENTITY_LINE = Line(1, 0)
