"""Exact incidence counting, richness profiling, and rich-line enumeration.

The product counter exploits Cartesian point sets A x B: a line y = c*x + d
is incident to (x, y) in A x B iff c*x + d lands in B, so counting per line
is O(|A|) membership tests instead of O(|A||B|) point checks.  The oracle
counter stays a definitional O(|P||L|) loop for cross-checking.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from statistics import median_low
from typing import NamedTuple

from . import kernels
from .core import CapExceededError, InputError, Line, Point, line_eval
from .energies import as_line_set, as_scalar_set

ORACLE_PAIR_CAP = 100_000_000
RICH_POINT_CAP = 5000


@dataclass(frozen=True)
class IncidenceProfile:
    total: int
    per_line: tuple  # ((Line, count), ...) in sorted line order
    histogram: dict  # richness -> number of lines

    def summary(self) -> dict:
        counts = [c for _, c in self.per_line]
        if not counts:
            return {"total": 0, "min": 0, "max": 0, "median": 0}
        return {"total": self.total, "min": min(counts), "max": max(counts),
                "median": median_low(counts)}


def count_incidences_oracle(points, L, cap: int = ORACLE_PAIR_CAP) -> int:
    """Definitional point-on-line count over all (point, line) pairs."""
    pts = [p if isinstance(p, Point) else Point(*p) for p in points]
    lines = sorted(as_line_set(L))
    if len(pts) * len(lines) > cap:
        raise CapExceededError(
            f"{len(pts)} x {len(lines)} point-line pairs exceed cap {cap}")
    return sum(1 for g in lines for p in pts if line_eval(g, p.x) == p.y)


def _integer_fast_path(a_vals, b_vals, cn, cd, dn, dd):
    """int64 kernel applicability: integral A and B, bounded coefficients."""
    if any(v.denominator != 1 for v in a_vals):
        return False
    if any(v.denominator != 1 for v in b_vals):
        return False
    mx = max((abs(v.numerator) for v in a_vals), default=0)
    mb = max((abs(v.numerator) for v in b_vals), default=0)
    return kernels.fits_incidence(
        mx, mb, max((abs(x) for x in cn), default=0), max(cd, default=1),
        max((abs(x) for x in dn), default=0), max(dd, default=1))


def count_incidences_product(A, B, L, threads=None) -> IncidenceProfile:
    """Per-line incidence counts of a line set against the grid A x B."""
    a_vals = sorted(as_scalar_set(A))
    b_vals = sorted(as_scalar_set(B))
    lines = sorted(as_line_set(L))
    if not lines:
        return IncidenceProfile(0, (), {})
    cn = [g.c.numerator for g in lines]
    cd = [g.c.denominator for g in lines]
    dn = [g.d.numerator for g in lines]
    dd = [g.d.denominator for g in lines]
    if a_vals and _integer_fast_path(a_vals, b_vals, cn, cd, dn, dd):
        xs = [v.numerator for v in a_vals]
        bs = [v.numerator for v in b_vals]
        counts = kernels.incidence_counts_int(xs, bs, cn, cd, dn, dd,
                                              threads).tolist()
    else:
        b_set = frozenset(b_vals)
        counts = [sum(1 for x in a_vals if g.c * x + g.d in b_set)
                  for g in lines]
    per_line = tuple(zip(lines, counts))
    return IncidenceProfile(sum(counts), per_line, dict(Counter(counts)))


def prune_richness_band(A, B, L, r_lo, r_hi, threads=None) -> frozenset:
    """Keep exactly the lines whose incidence count lies in [r_lo, r_hi]."""
    if not 0 <= r_lo or not r_lo <= r_hi:
        raise InputError(f"invalid richness band [{r_lo}, {r_hi}]")
    profile = count_incidences_product(A, B, L, threads)
    return frozenset(g for g, c in profile.per_line if r_lo <= c <= r_hi)


def default_richness_band(profile: IncidenceProfile):
    """Band [median/4, 4*median] of the observed per-line richness."""
    counts = [c for _, c in profile.per_line]
    if not counts:
        return (0, 0)
    med = median_low(counts)
    return (med // 4, 4 * med)


class VerticalLine(NamedTuple):
    """x = const; only rich-line enumeration ever produces these."""

    x: Fraction


@dataclass(frozen=True)
class RichLineReport:
    r: int
    point_count: int
    entries: tuple  # ((Line | VerticalLine, count), ...)
    st_reference: float  # m^2/r^3 + m/r

    @property
    def lines(self):
        return [entry[0] for entry in self.entries]


def _pair_line_key(p: Point, q: Point):
    """Canonical key of the line through two distinct points.

    Non-vertical: coprime direction (den, num) of the slope plus the exact
    y-intercept; vertical: (0, 1) direction plus the shared x.
    """
    if p.x == q.x:
        return (0, 1, p.x)
    slope = (q.y - p.y) / (q.x - p.x)
    intercept = p.y - slope * p.x
    return (slope.denominator, slope.numerator, intercept)


def enumerate_rich_lines(points, r: int, cap: int = RICH_POINT_CAP) -> RichLineReport:
    """All lines through at least r of the given points, exactly.

    Groups the m(m-1)/2 point pairs by canonical line key; a line through t
    points contributes exactly t(t-1)/2 pairs, so t is recovered from the
    pair multiplicity.  Vertical lines are reported as VerticalLine.
    """
    if r < 2:
        raise InputError("rich-line threshold r must be at least 2")
    pts = sorted({p if isinstance(p, Point) else Point(*p) for p in points})
    m = len(pts)
    if m > cap:
        raise CapExceededError(f"{m} points exceed rich-line cap {cap}")
    pair_counts = Counter()
    for i in range(m):
        for j in range(i + 1, m):
            pair_counts[_pair_line_key(pts[i], pts[j])] += 1
    need = r * (r - 1) // 2
    entries = []
    for key, pc in pair_counts.items():
        if pc < need:
            continue
        t = (1 + math.isqrt(1 + 8 * pc)) // 2
        assert t * (t - 1) // 2 == pc, "pair count is not triangular"
        if t >= r:
            den, num, anchor = key
            if den == 0:
                entries.append((VerticalLine(anchor), t))
            else:
                entries.append((Line(Fraction(num, den), anchor), t))
    entries.sort(key=lambda e: (isinstance(e[0], VerticalLine), e[0]))
    reference = m * m / r ** 3 + m / r
    return RichLineReport(r, m, tuple(entries), reference)
