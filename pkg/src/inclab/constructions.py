"""Configuration generators and the totient machinery behind them.

Three generator families over integer lattices:

  * build_family(n, alpha): the alpha-parameterized grid n^alpha x n^(1-alpha)
    with lines y = (a + b/c)(x - i) + d over coprime (b, c);
  * build_elekes(n): the n^(1/3) x n^(2/3)-flavored grid with y = a*x + b;
  * build_geometric(n): powers of two with lines y = 2^j * x.

All exponent bounds are exact integer floors of n^(p/q); no floating point
enters any generated coordinate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .core import InputError, Line
from .energies import as_line_set, as_scalar_set
from .incidence import count_incidences_product

# Above this limit the exact rational value of sum(phi(i)/i^2) is skipped:
# its canonical denominator grows like lcm(1..r)^2 and turns into megabyte
# integers long before r reaches 10^6.
EXACT_RATIO_SUM_LIMIT = 20000


@dataclass(frozen=True)
class ConfigMeta:
    name: str
    n: int
    alpha: Optional[Fraction]


@dataclass(frozen=True)
class Configuration:
    A: frozenset
    B: frozenset
    lines: frozenset
    meta: ConfigMeta

    def sorted_A(self):
        return sorted(self.A)

    def sorted_B(self):
        return sorted(self.B)

    def sorted_lines(self):
        return sorted(self.lines)

    def points(self):
        """Materialize A x B (|A|*|B| points); only do this when needed."""
        from .core import Point
        return [Point(a, b) for a in self.sorted_A() for b in self.sorted_B()]


@dataclass(frozen=True)
class TotientTable:
    limit: int
    phi: np.ndarray  # phi[i] = totient of i for 1 <= i <= limit; phi[0] = 0


def totient_table(r: int) -> TotientTable:
    """Sieve phi(1..r); phi[p] == p marks p untouched, hence prime."""
    if r < 1:
        raise InputError("totient table limit must be at least 1")
    phi = np.arange(r + 1, dtype=np.int64)
    phi[0] = 0
    for p in range(2, r + 1):
        if phi[p] == p:
            phi[p::p] -= phi[p::p] // p
    return TotientTable(r, phi)


def iroot(m: int, k: int) -> int:
    """Exact floor(m ** (1/k)) for nonnegative integer m via Newton."""
    if m < 0:
        raise InputError("iroot of a negative integer")
    if k == 1 or m < 2:
        return m
    x = 1 << -(-m.bit_length() // k)
    while True:
        y = ((k - 1) * x + m // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def floor_pow(n: int, e: Fraction) -> int:
    """Exact floor(n ** e) for rational e >= 0."""
    e = Fraction(e)
    if e < 0:
        raise InputError("floor_pow needs a nonnegative exponent")
    if e == 0:
        return 1
    return iroot(n ** e.numerator, e.denominator)


@dataclass(frozen=True)
class TotientSumReport:
    r: int
    sum_phi: int
    sum_i_phi: int
    ratio_sum: Optional[Fraction]  # exact sum(phi(i)/i^2), when affordable
    ratio_sum_decimal: float
    ref_quadratic: float  # (3/pi^2) r^2
    ref_cubic: int  # r^3
    ref_log: float  # ln r


def _exact_ratio_sum(phi, lo, hi) -> Fraction:
    # pairwise merge keeps intermediate denominators balanced
    if hi - lo == 1:
        return Fraction(int(phi[lo]), lo * lo)
    mid = (lo + hi) // 2
    return _exact_ratio_sum(phi, lo, mid) + _exact_ratio_sum(phi, mid, hi)


def totient_sum_report(r: int) -> TotientSumReport:
    """Exact totient sums next to their asymptotic reference shapes."""
    if r < 2:
        raise InputError("totient sum report needs r >= 2")
    table = totient_table(r)
    phi_list = table.phi.tolist()
    sum_phi = sum(phi_list[1:])
    sum_i_phi = sum(i * p for i, p in enumerate(phi_list))
    idx = np.arange(1, r + 1, dtype=np.float64)
    decimal = float(np.sum(table.phi[1:].astype(np.float64) / (idx * idx)))
    exact = None
    if r <= EXACT_RATIO_SUM_LIMIT:
        exact = _exact_ratio_sum(table.phi, 1, r + 1)
    return TotientSumReport(
        r, sum_phi, sum_i_phi, exact, decimal,
        3 / math.pi ** 2 * r * r, r ** 3, math.log(r))


def build_family(n: int, alpha) -> Configuration:
    """The alpha-family configuration on the n^alpha x n^(1-alpha) grid.

    Lines are y = (a + b/c)(x - i) + d with 0 <= a < A_max,
    1 <= b < c <= C_max coprime, 0 <= i < c, 0 <= d < D_max, where
    A_max = max(1, floor(n^(1-2a))/4), C_max = floor(n^(a-1/3)) and
    D_max = max(1, floor(n^(1-a))/4).  C_max < 2 admits no slope and
    yields an empty line set.
    """
    alpha = Fraction(alpha)
    if not Fraction(1, 3) < alpha < Fraction(1, 2):
        raise InputError(f"alpha must lie strictly in (1/3, 1/2), got {alpha}")
    if n < 2:
        raise InputError("n must be at least 2")
    n_a = floor_pow(n, alpha)
    n_b = floor_pow(n, 1 - alpha)
    a_max = max(1, floor_pow(n, 1 - 2 * alpha) // 4)
    c_max = floor_pow(n, alpha - Fraction(1, 3))
    d_max = max(1, n_b // 4)

    A = frozenset(Fraction(x) for x in range(n_a))
    B = frozenset(Fraction(j) for j in range(-((n_b - 1) // 2), n_b // 2 + 1))

    lines = []
    for c in range(2, c_max + 1):
        for b in range(1, c):
            if math.gcd(b, c) != 1:
                continue
            for a in range(a_max):
                slope = Fraction(a * c + b, c)
                for i in range(c):
                    shift = slope * i
                    for d in range(d_max):
                        lines.append(Line(slope, d - shift))
    return Configuration(A, B, frozenset(lines),
                         ConfigMeta("family", n, alpha))


def family_line_count_formula(n: int, alpha) -> int:
    """Closed form sum_c A_max * D_max * c * phi(c) for build_family."""
    alpha = Fraction(alpha)
    a_max = max(1, floor_pow(n, 1 - 2 * alpha) // 4)
    c_max = floor_pow(n, alpha - Fraction(1, 3))
    d_max = max(1, floor_pow(n, 1 - alpha) // 4)
    if c_max < 2:
        return 0
    phi = totient_table(c_max).phi
    return sum(a_max * d_max * c * int(phi[c]) for c in range(2, c_max + 1))


def family_slope_count_formula(n: int, alpha) -> int:
    """Closed form A_max * sum_c phi(c) for the family slope set size."""
    alpha = Fraction(alpha)
    a_max = max(1, floor_pow(n, 1 - 2 * alpha) // 4)
    c_max = floor_pow(n, alpha - Fraction(1, 3))
    if c_max < 2:
        return 0
    phi = totient_table(c_max).phi
    return a_max * sum(int(phi[c]) for c in range(2, c_max + 1))


def build_elekes(n: int) -> Configuration:
    """Grid {1..k/2} x {1..2k^2} with the n lines y = a*x + b, k = n^(1/3).

    n must be a perfect cube with even cube root so every range endpoint
    is an exact integer.
    """
    k = iroot(n, 3)
    if k ** 3 != n:
        raise InputError(f"{n} is not a perfect cube")
    if k % 2 != 0:
        raise InputError(f"cube root {k} must be even")
    A = frozenset(Fraction(x) for x in range(1, k // 2 + 1))
    B = frozenset(Fraction(y) for y in range(1, 2 * k * k + 1))
    lines = frozenset(Line(a, b)
                      for a in range(1, k + 1)
                      for b in range(1, k * k + 1))
    return Configuration(A, B, lines, ConfigMeta("elekes", n, Fraction(1, 3)))


def build_geometric(n: int) -> Configuration:
    """Powers of two {2^0..2^(n-1)} with lines y = 2^j x, 0 <= j <= n/2."""
    if n < 2 or n % 2 != 0:
        raise InputError("geometric construction needs even n >= 2")
    A = frozenset(Fraction(1 << i) for i in range(n))
    lines = frozenset(Line(1 << j, 0) for j in range(n // 2 + 1))
    return Configuration(A, A, lines, ConfigMeta("geometric", n, None))


def build_configuration(name: str, n: int, alpha=None) -> Configuration:
    """Dispatch by construction name (CLI entry point)."""
    if name == "family":
        if alpha is None:
            raise InputError("family construction requires alpha")
        return build_family(n, alpha)
    if name == "elekes":
        return build_elekes(n)
    if name == "geometric":
        return build_geometric(n)
    raise InputError(f"unknown construction {name!r}")


def slope_set(L) -> frozenset:
    """Deduplicated slopes of a line set."""
    return frozenset(g.c for g in as_line_set(L))


def normalize_line_count(L, n: int, A, B, threads=None) -> frozenset:
    """Adjust a line set to exactly n lines.

    Excess lines are removed lowest-incidence first (ties by (slope,
    intercept)); missing lines are padded with slope-1 lines whose
    intercepts sit above B's range, adding zero incidences.
    """
    lines = as_line_set(L)
    if len(lines) == n:
        return lines
    if len(lines) > n:
        profile = count_incidences_product(A, B, lines, threads)
        ranked = sorted(profile.per_line, key=lambda e: (e[1], e[0]))
        return frozenset(g for g, _ in ranked[len(lines) - n:])
    a_vals = sorted(as_scalar_set(A))
    b_vals = sorted(as_scalar_set(B))
    taken = {g.d for g in lines if g.c == 1}
    d = math.floor(b_vals[-1] - a_vals[0]) + 1 if a_vals and b_vals else 1
    out = set(lines)
    while len(out) < n:
        if Fraction(d) not in taken:
            out.add(Line(1, d))
        d += 1
    return frozenset(out)
