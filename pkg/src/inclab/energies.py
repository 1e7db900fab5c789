"""Exact additive, multiplicative, bipartite, and line energies.

Every energy is a collision count: pair values (sums, products, or group
quotients of lines) are tallied into an exact multiplicity table and the
energy is the sum of squared multiplicities.  Pair enumeration is O(k^2);
when the inputs scale into int64 the kernels do the tallying, otherwise a
Fraction-keyed Counter path computes the same table exactly.

A deliberately naive O(k^4) quadruple oracle is provided for cross-checking;
it never shares the multiplicity-table code path.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import kernels
from .core import (CapExceededError, DomainError, InputError, Line,
                   line_quotient)

ENERGY_KINDS = ("additive", "multiplicative", "bipartite", "line")

ORACLE_CAP = 40


def as_scalar_set(values: Iterable) -> frozenset:
    """Deduplicated frozenset of exact rationals."""
    return frozenset(Fraction(v) for v in values)


def as_line_set(lines: Iterable) -> frozenset:
    """Deduplicated frozenset of Line values."""
    return frozenset(ln if isinstance(ln, Line) else Line(*ln) for ln in lines)


@dataclass(frozen=True)
class EnergyReport:
    kind: str
    value: int
    support: int
    bounds: tuple = ()

    def bound(self, label: str):
        for lab, val in self.bounds:
            if lab == label:
                return val
        raise KeyError(label)


def _scaled_ints(*value_lists):
    """Scale rational lists to integers by the common denominator LCM.

    Returns (scaled_lists, lcm).  Scaling by a positive constant preserves
    collision structure for sums, differences, and products alike.
    """
    denom = 1
    for vals in value_lists:
        for v in vals:
            denom = math.lcm(denom, v.denominator)
    scaled = [[v.numerator * (denom // v.denominator) for v in vals]
              for vals in value_lists]
    return scaled, denom


def _collision_energy(u, v, op, threads=None):
    """(value, support) of the cross-op collision table; exact in all paths."""
    (su, sv), _ = _scaled_ints(u, v)
    mu = max((abs(x) for x in su), default=0)
    mv = max((abs(x) for x in sv), default=0)
    if op == "sum" and kernels.fits_sum(mu, mv):
        return kernels.sum_energy_int(su, sv, threads)
    if op == "prod" and kernels.fits_prod(mu, mv):
        return kernels.prod_energy_int(su, sv, threads)
    table = Counter()
    if op == "sum":
        for a in u:
            for b in v:
                table[a + b] += 1
    else:
        for a in u:
            for b in v:
                table[a * b] += 1
    return sum(m * m for m in table.values()), len(table)


def additive_energy(A, threads=None) -> EnergyReport:
    """E+(A): ordered quadruples with a + b = c + d."""
    vals = sorted(as_scalar_set(A))
    if not vals:
        raise InputError("additive energy of the empty set")
    k = len(vals)
    value, support = _collision_energy(vals, vals, "sum", threads)
    bounds = (("|A|^2", k * k), ("|A|^3", k ** 3),
              ("|A|^4/|A+A|", Fraction(k ** 4, support)))
    return EnergyReport("additive", value, support, bounds)


def multiplicative_energy(A, threads=None) -> EnergyReport:
    """Ex(A): ordered quadruples with a * b = c * d; requires 0 not in A."""
    vals = sorted(as_scalar_set(A))
    if not vals:
        raise InputError("multiplicative energy of the empty set")
    if any(v == 0 for v in vals):
        raise InputError("multiplicative energy requires 0 not in the set")
    k = len(vals)
    value, support = _collision_energy(vals, vals, "prod", threads)
    bounds = (("|A|^2", k * k), ("|A|^3", k ** 3))
    return EnergyReport("multiplicative", value, support, bounds)


def bipartite_additive_energy(A, B, threads=None) -> EnergyReport:
    """E+(A,B): quadruples in A x B x A x B with a + b = c + d."""
    va = sorted(as_scalar_set(A))
    vb = sorted(as_scalar_set(B))
    if not va or not vb:
        raise InputError("bipartite energy of an empty set")
    value, support = _collision_energy(va, vb, "sum", threads)
    ea = additive_energy(va).value
    eb = additive_energy(vb).value
    bounds = (("|A||B|", len(va) * len(vb)),
              ("sqrt(E+(A)E+(B))", math.sqrt(float(ea) * float(eb))))
    return EnergyReport("bipartite", value, support, bounds)


def bipartite_via_difference_profiles(A, B) -> int:
    """E+(A,B) recomputed from a - c = d - b, i.e. sum_x rA-(x) * rB-(x)."""
    va = sorted(as_scalar_set(A))
    vb = sorted(as_scalar_set(B))
    ra = Counter(a - c for a in va for c in va)
    rb = Counter(d - b for d in vb for b in vb)
    return sum(m * rb[x] for x, m in ra.items())


def _line_arrays(lines):
    """Sorted lines split into slope/intercept numerator/denominator lists."""
    ls = sorted(lines)
    cn = [g.c.numerator for g in ls]
    cd = [g.c.denominator for g in ls]
    dn = [g.d.numerator for g in ls]
    dd = [g.d.denominator for g in ls]
    return ls, cn, cd, dn, dd


def line_energy(L, threads=None) -> EnergyReport:
    """E(L): quadruples of lines with inverse(l1) o l2 = inverse(l3) o l4."""
    lines = as_line_set(L)
    if not lines:
        raise InputError("line energy of the empty set")
    if any(g.c == 0 for g in lines):
        raise DomainError("line energy requires all slopes nonzero")
    ls, cn, cd, dn, dd = _line_arrays(lines)
    k = len(ls)
    if kernels.fits_quotient(max(abs(x) for x in cn), max(cd),
                             max((abs(x) for x in dn), default=0), max(dd)):
        value, support = kernels.quotient_energy_int(cn, cd, dn, dd, threads)
    else:
        table = Counter(line_quotient(g, h) for g in ls for h in ls)
        value = sum(m * m for m in table.values())
        support = len(table)
    bounds = (("|L|^2", k * k), ("|L|^4", k ** 4))
    return EnergyReport("line", value, support, bounds)


def quadruple_oracle(kind: str, A=None, B=None, L=None, cap: int = ORACLE_CAP) -> int:
    """Independent O(k^4) oracle: enumerate quadruples of the defining equation.

    Refuses inputs above `cap` elements; this is a correctness yardstick,
    not a production counter.
    """
    if kind not in ENERGY_KINDS:
        raise InputError(f"unknown energy kind {kind!r}")
    if kind == "line":
        lines = sorted(as_line_set(L))
        if len(lines) > cap:
            raise CapExceededError(f"oracle cap {cap} exceeded: {len(lines)} lines")
        flat = []
        for g in lines:
            for h in lines:
                q = line_quotient(g, h)
                flat.append((q.c.numerator, q.c.denominator,
                             q.d.numerator, q.d.denominator))
    elif kind == "bipartite":
        va = sorted(as_scalar_set(A))
        vb = sorted(as_scalar_set(B))
        if max(len(va), len(vb)) > cap:
            raise CapExceededError(f"oracle cap {cap} exceeded")
        flat = [a + b for a in va for b in vb]
    else:
        vals = sorted(as_scalar_set(A))
        if len(vals) > cap:
            raise CapExceededError(f"oracle cap {cap} exceeded: {len(vals)} elements")
        if kind == "additive":
            flat = [a + b for a in vals for b in vals]
        else:
            flat = [a * b for a in vals for b in vals]
    # quadruple (x1, x2, x3, x4) satisfies the equation iff the pair values agree
    flat = [(f.numerator, f.denominator) if isinstance(f, Fraction) else f
            for f in flat]
    return sum(1 for s in flat for t in flat if s == t)


@dataclass(frozen=True)
class CartesianEnergyReport:
    line_energy: int
    mult_energy_slopes: int
    add_energy_intercepts: int
    product: int
    holds: bool


def cartesian_line_energy_bound(C, D, threads=None) -> CartesianEnergyReport:
    """Compare E(C x D) against Ex(C) * E+(D) for the dual line grid."""
    cs = as_scalar_set(C)
    ds = as_scalar_set(D)
    if any(c == 0 for c in cs):
        raise InputError("slope set C must avoid 0")
    lines = frozenset(Line(c, d) for c in cs for d in ds)
    e_lines = line_energy(lines, threads).value
    e_mult = multiplicative_energy(cs, threads).value
    e_add = additive_energy(ds, threads).value
    product = e_mult * e_add
    return CartesianEnergyReport(e_lines, e_mult, e_add, product,
                                 e_lines <= product)


@dataclass(frozen=True)
class SlopePointBoundReport:
    energy: int
    max_parallel: int
    max_concurrent: int
    bound: float


def prnrw_bound_report(L, threads=None) -> SlopePointBoundReport:
    """E(L) next to the slope/point bound shape sqrt(m)|L|^2.5 + M|L|^2.

    m is the largest number of lines sharing a slope; M the largest number
    of lines through a common point (1 when no two lines cross).
    """
    lines = sorted(as_line_set(L))
    if len(lines) < 2:
        raise InputError("need at least 2 lines")
    energy = line_energy(lines, threads).value
    m = max(Counter(g.c for g in lines).values())
    crossings = Counter()
    for i, g in enumerate(lines):
        for h in lines[i + 1:]:
            if g.c != h.c:
                x = (h.d - g.d) / (g.c - h.c)
                crossings[(x, g.c * x + g.d)] += 1
    big_m = 1
    for pair_count in crossings.values():
        # k concurrent lines produce k(k-1)/2 crossing pairs at their point
        k = (1 + math.isqrt(1 + 8 * pair_count)) // 2
        big_m = max(big_m, k)
    n = len(lines)
    bound = math.sqrt(m) * n ** 2.5 + big_m * n * n
    return SlopePointBoundReport(energy, m, big_m, bound)


@dataclass(frozen=True)
class IncidenceEnergyBoundReport:
    incidences: int
    line_energy: int
    main_term: float
    secondary_term: float


def rs_incidence_bound_report(A, B, L, threads=None) -> IncidenceEnergyBoundReport:
    """Incidence count next to the energy-based bound shape.

    Main term |B|^(1/2) |A|^(2/3) E(L)^(1/6) |L|^(1/3), secondary
    |B|^(1/2) |L|; both reported, never asserted.
    """
    from .incidence import count_incidences_product

    a = as_scalar_set(A)
    b = as_scalar_set(B)
    lines = as_line_set(L)
    total = count_incidences_product(a, b, lines, threads=threads).total
    energy = line_energy(lines, threads).value
    na, nb, nl = len(a), len(b), len(lines)
    main = nb ** 0.5 * na ** (2 / 3) * float(energy) ** (1 / 6) * nl ** (1 / 3)
    secondary = nb ** 0.5 * nl
    return IncidenceEnergyBoundReport(total, energy, main, secondary)
