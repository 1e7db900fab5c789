"""Acceptance suite: every desk-scale-checkable claim as a pass/fail check.

Each criterion function returns a CheckResult; run_all prints one line per
criterion and reports overall success.  Criterion 12 re-runs the per-module
invariant properties under three distinct seeds.

Expected values marked exact below were produced by the independent oracles
in this package (quadruple enumeration, definitional gcd counts, point-line
evaluation) and then frozen.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .constructions import (build_elekes, build_family, build_geometric,
                            family_line_count_formula,
                            family_slope_count_formula, iroot, slope_set,
                            totient_sum_report, totient_table)
from .core import (Line, Point, line_compose, line_eval, line_inverse,
                   line_quotient, make_rational)
from .energies import (additive_energy, bipartite_additive_energy,
                       bipartite_via_difference_profiles,
                       cartesian_line_energy_bound, line_energy,
                       multiplicative_energy, prnrw_bound_report,
                       quadruple_oracle)
from .incidence import (VerticalLine, count_incidences_oracle,
                        count_incidences_product, enumerate_rich_lines,
                        prune_richness_band)
from .structure import (concurrent_families, dyadic_profile, elekes_report,
                        iterative_decomposition, parallel_families,
                        structure_report)
from .sweep import exponent_fit

ALPHA_GRID_N = (2 ** 12, 2 ** 16, 2 ** 20, 2 ** 24)
ALPHA = Fraction(5, 12)


@dataclass(frozen=True)
class CheckResult:
    criterion: int
    name: str
    ok: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (f"C{self.criterion:02d} {status} ({self.seconds:7.2f}s) "
                f"{self.name}: {self.detail}")


def _check(num: int, name: str, fn: Callable[[], str]) -> CheckResult:
    t0 = time.perf_counter()
    try:
        detail = fn()
        ok = True
    except AssertionError as exc:
        detail = str(exc) or "assertion failed"
        ok = False
    except Exception as exc:  # a crash is a failure, not an abort
        detail = f"{type(exc).__name__}: {exc}"
        ok = False
    return CheckResult(num, name, ok, detail, time.perf_counter() - t0)


@lru_cache(maxsize=None)
def _family(n: int):
    return build_family(n, ALPHA)


@lru_cache(maxsize=None)
def _elekes(n: int):
    return build_elekes(n)


def interval_additive_energy(m: int) -> int:
    """E+ of an m-term arithmetic progression: (2m^3 + m)/3."""
    return (2 * m ** 3 + m) // 3


# ---------------------------------------------------------------------------
# criteria 1..11


def criterion_1(**_) -> CheckResult:
    def run():
        a, b = Line(2, 3), Line(2, 4)
        assert line_compose(a, b) == Line(4, 11), f"(2,3)o(2,4) = {line_compose(a, b)}"
        assert line_compose(b, a) == Line(4, 10), f"(2,4)o(2,3) = {line_compose(b, a)}"
        return "(2,3)o(2,4)=(4,11), (2,4)o(2,3)=(4,10)"
    return _check(1, "worked group example", run)


def criterion_2(threads=None, **_) -> CheckResult:
    def run():
        totals = []
        for n in (64, 512, 4096, 32768):
            cfg = _elekes(n)
            total = count_incidences_product(cfg.A, cfg.B, cfg.lines, threads).total
            expected = n * iroot(n, 3) // 2
            assert total == expected, f"n={n}: {total} != {expected}"
            if n <= 512:
                oracle = count_incidences_oracle(cfg.points(), cfg.lines)
                assert oracle == total, f"n={n}: oracle {oracle} != {total}"
            totals.append(total)
        return f"totals {totals} = n^(4/3)/2 exactly, oracle-checked at n<=512"
    return _check(2, "grid incidence exactness", run)


def criterion_3(threads=None, **_) -> CheckResult:
    def run():
        points = []
        for n in ALPHA_GRID_N:
            cfg = _family(n)
            total = count_incidences_product(cfg.A, cfg.B, cfg.lines, threads).total
            points.append((n, total))
        fit = exponent_fit(points)
        lo, hi = 4 / 3 - 0.07, 4 / 3 + 0.07
        assert lo <= fit.slope <= hi, \
            f"incidence exponent {fit.slope:.4f} outside [{lo:.4f}, {hi:.4f}]"
        return f"incidence exponent {fit.slope:.4f} in 4/3 +- 0.07 ({points})"
    return _check(3, "family incidence exponent", run)


def _random_fraction(rng, num=9, den=9):
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def _random_scalars(rng, kmax, nonzero=False, big=False):
    k = rng.randint(1, kmax)
    out = set()
    while len(out) < k:
        v = _random_fraction(rng)
        if big:
            v = v * (1 << 40) + rng.randint(0, 3)
        if nonzero and v == 0:
            continue
        out.add(v)
    return frozenset(out)


def _random_lines(rng, kmax, big=False):
    k = rng.randint(1, kmax)
    out = set()
    while len(out) < k:
        c = _random_fraction(rng)
        if c == 0:
            continue
        d = _random_fraction(rng)
        if big:
            d = d * (1 << 40)
        out.add(Line(c, d))
    return frozenset(out)


def criterion_4(seed=0, threads=None, **_) -> CheckResult:
    def run():
        rng = random.Random(seed)
        for i in range(200):
            big = i % 10 == 9  # force the exact non-kernel path sometimes
            A = _random_scalars(rng, 25, big=big)
            B = _random_scalars(rng, 25)
            C = _random_scalars(rng, 25, nonzero=True)
            L = _random_lines(rng, 15, big=big)
            assert additive_energy(A, threads).value == quadruple_oracle("additive", A=A)
            assert multiplicative_energy(C, threads).value == \
                quadruple_oracle("multiplicative", A=C)
            assert bipartite_additive_energy(A, B, threads).value == \
                quadruple_oracle("bipartite", A=A, B=B)
            assert line_energy(L, threads).value == quadruple_oracle("line", L=L)
        for i in range(100):
            A = _random_scalars(rng, 40)
            B = _random_scalars(rng, 40)
            L = _random_lines(rng, 200)
            prof = count_incidences_product(A, B, L, threads)
            pts = [Point(a, b) for a in sorted(A) for b in sorted(B)]
            assert prof.total == count_incidences_oracle(pts, L)
        return "200 energy instances + 100 incidence instances match oracles"
    return _check(4, "oracle equivalence", run)


def criterion_5(seed=0, threads=None, **_) -> CheckResult:
    def run():
        rng = random.Random(seed + 5)
        for _ in range(100):
            C = _random_scalars(rng, 20, nonzero=True)
            D = _random_scalars(rng, 20)
            rep = cartesian_line_energy_bound(C, D, threads)
            assert rep.holds, \
                f"E={rep.line_energy} > {rep.product} for C={sorted(C)} D={sorted(D)}"
            grid = len(C) * len(D)
            assert rep.line_energy >= grid * grid, "diagonal bound violated"
        return "E(CxD) <= Ex(C)E+(D) and E >= |CxD|^2 on 100 instances"
    return _check(5, "cartesian energy inequality", run)


def criterion_6(threads=None, **_) -> CheckResult:
    def run():
        details = []
        for n in (512, 4096):
            cfg = _elekes(n)
            e = line_energy(cfg.lines, threads).value
            lo = 0.5 * float(n) ** (8 / 3)
            hi = 10 * float(n) ** (8 / 3) * math.log2(n)
            assert lo <= e <= hi, f"n={n}: E={e} outside [{lo:.3e}, {hi:.3e}]"
            details.append(f"n={n}: E={e}")
        return "; ".join(details) + " within [0.5 n^(8/3), 10 n^(8/3) log2 n]"
    return _check(6, "grid line-energy band", run)


def criterion_7(**_) -> CheckResult:
    def run():
        for r in (10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6):
            rep = totient_sum_report(r)
            gap = abs(rep.sum_phi - rep.ref_quadratic)
            assert gap <= 2 * r * math.log(r), f"r={r}: |sum phi - 3r^2/pi^2| = {gap}"
            ratio = rep.ratio_sum if rep.ratio_sum is not None else rep.ratio_sum_decimal
            assert ratio <= 1 + math.log(r), f"r={r}: sum phi/i^2 = {ratio}"
        return "totient sum bounds hold for r in {1e3, 1e4, 1e5, 1e6}"
    return _check(7, "totient sum numerics", run)


def criterion_8(threads=None, **_) -> CheckResult:
    def run():
        points = []
        for n in ALPHA_GRID_N:
            s = slope_set(_family(n).lines)
            points.append((n, multiplicative_energy(s, threads).value))
        fit = exponent_fit(points)
        assert fit.slope <= 0.85, f"slope-energy exponent {fit.slope:.4f} > 0.85"
        return f"Ex(S) exponent {fit.slope:.4f} <= 0.85 ({points})"
    return _check(8, "slope-set energy trend", run)


def criterion_9(threads=None, **_) -> CheckResult:
    def run():
        cfg = build_geometric(64)
        prof = count_incidences_product(cfg.A, cfg.B, cfg.lines, threads)
        for g, count in prof.per_line:
            j = g.c.numerator.bit_length() - 1
            assert count == 64 - j, f"line 2^{j}: count {count} != {64 - j}"
        rep = elekes_report(cfg.A, cfg.lines, Fraction(1, 2), threads)
        assert rep.k == 33, f"k = {rep.k}"
        assert rep.t == 1, f"t = {rep.t}"
        assert rep.mult_energy_slopes == 23969 == interval_additive_energy(33), \
            f"Ex(S) = {rep.mult_energy_slopes}"
        return "k=33, t=1, Ex(S)=23969, per-line counts 64-j"
    return _check(9, "geometric example end-to-end", run)


def _grid_points_int(g: int):
    return [(x, y) for x in range(g) for y in range(g)]


def _rich_oracle_sets(pts_int):
    """All maximal collinear subsets of >= 2 points, by exhaustive pair scan."""
    seen = set()
    m = len(pts_int)
    for i in range(m):
        px, py = pts_int[i]
        for j in range(i + 1, m):
            qx, qy = pts_int[j]
            dx, dy = qx - px, qy - py
            members = frozenset(
                (sx, sy) for sx, sy in pts_int
                if dx * (sy - py) == dy * (sx - px))
            seen.add(members)
    return seen


def criterion_10(**_) -> CheckResult:
    def run():
        for g in range(2, 13):
            pts_int = _grid_points_int(g)
            oracle_sets = _rich_oracle_sets(pts_int)
            points = [Point(x, y) for x, y in pts_int]
            for r in sorted({3, 4, g}):
                if r < 2:
                    continue
                expected = {s for s in oracle_sets if len(s) >= r}
                report = enumerate_rich_lines(points, r)
                assert len(report.entries) == len(expected), \
                    f"g={g} r={r}: {len(report.entries)} lines, oracle {len(expected)}"
                for entry, count in report.entries:
                    if isinstance(entry, VerticalLine):
                        members = frozenset(p for p in pts_int if p[0] == entry.x)
                    else:
                        members = frozenset(
                            p for p in pts_int if line_eval(entry, p[0]) == p[1])
                    assert members in expected, f"g={g} r={r}: spurious line {entry}"
                    assert len(members) == count, f"g={g} r={r}: bad count for {entry}"
        three = enumerate_rich_lines([Point(x, y) for x, y in _grid_points_int(3)], 3)
        assert len(three.entries) == 8, f"3x3 r=3: {len(three.entries)} lines"
        return "grids g<=12 match the exhaustive oracle; 3x3 r=3 gives 8 lines"
    return _check(10, "rich-line exactness", run)


def criterion_11(threads=None, **_) -> CheckResult:
    def run():
        rep = structure_report(_elekes(512), threads=threads)
        sizes = [len(ls) for _, ls in rep.inventory.parallel]
        assert sizes == [64] * 8, f"parallel family sizes {sizes}"
        assert all(f.intercept_energy == 174784 == interval_additive_energy(64)
                   for f in rep.selected), \
            f"intercept energies {[f.intercept_energy for f in rep.selected]}"
        assert rep.slopes == tuple(Fraction(s) for s in range(1, 9)), \
            f"S = {rep.slopes}"
        for n in ALPHA_GRID_N:
            cfg = _family(n)
            families = parallel_families(cfg.lines)
            formula = family_slope_count_formula(n, ALPHA)
            assert len(families) == formula == len(slope_set(cfg.lines)), \
                f"n={n}: {len(families)} families != formula {formula}"
            assert len(cfg.lines) == family_line_count_formula(n, ALPHA)
        return "8 parallel families of 64, E+ = 174784 each, S = {1..8}; " \
               "family counts match closed forms on the alpha grid"
    return _check(11, "structure pipeline", run)


# ---------------------------------------------------------------------------
# criterion 12: the per-module invariant suite, three seeds


def _inv_group_axioms(rng, threads):
    identity = Line(1, 0)
    for _ in range(1000):
        tri = []
        while len(tri) < 3:
            c = _random_fraction(rng)
            if c != 0:
                tri.append(Line(c, _random_fraction(rng)))
        f, g, h = tri
        assert line_compose(line_compose(f, g), h) == line_compose(f, line_compose(g, h))
        assert line_compose(identity, f) == f == line_compose(f, identity)
        assert line_compose(f, line_inverse(f)) == identity
        assert line_compose(line_inverse(f), f) == identity
        assert line_quotient(f, g) == line_compose(line_inverse(f), g)
    assert line_compose(Line(2, 3), Line(2, 4)) != line_compose(Line(2, 4), Line(2, 3))
    assert make_rational(6, 4) == make_rational(-3, -2) == Fraction(3, 2)
    assert hash(make_rational(2, 4)) == hash(Fraction(1, 2))


def _inv_energy_bounds(rng, threads):
    for _ in range(25):
        A = _random_scalars(rng, 25)
        k = len(A)
        rep = additive_energy(A, threads)
        assert k * k <= rep.value <= k ** 3
        assert rep.value >= Fraction(k ** 4, rep.support), "sum-set lower bound"
        assert rep.value >= rep.support


def _inv_oracle_equivalence(rng, threads):
    for i in range(200):
        big = i % 10 == 9
        A = _random_scalars(rng, 25, big=big)
        B = _random_scalars(rng, 25)
        C = _random_scalars(rng, 25, nonzero=True)
        L = _random_lines(rng, 15, big=big)
        assert additive_energy(A, threads).value == quadruple_oracle("additive", A=A)
        assert multiplicative_energy(C, threads).value == \
            quadruple_oracle("multiplicative", A=C)
        assert bipartite_additive_energy(A, B, threads).value == \
            quadruple_oracle("bipartite", A=A, B=B)
        assert line_energy(L, threads).value == quadruple_oracle("line", L=L)


def _inv_bipartite_cauchy_schwarz(rng, threads):
    for _ in range(50):
        A = _random_scalars(rng, 20)
        B = _random_scalars(rng, 20)
        eab = bipartite_additive_energy(A, B, threads).value
        assert eab == bipartite_via_difference_profiles(A, B)
        assert eab ** 2 <= additive_energy(A).value * additive_energy(B).value
    A = _random_scalars(rng, 20)
    assert bipartite_additive_energy(A, A).value == additive_energy(A).value


def _inv_line_energy_bounds(rng, threads):
    for _ in range(40):
        L = _random_lines(rng, 15)
        k = len(L)
        val = line_energy(L, threads).value
        assert k * k <= val <= k ** 4


def _inv_invariance(rng, threads):
    for _ in range(30):
        A = _random_scalars(rng, 15)
        C = _random_scalars(rng, 15, nonzero=True)
        s = _random_fraction(rng)
        lam = Fraction(0)
        while lam == 0:
            lam = _random_fraction(rng)
        base = additive_energy(A).value
        assert base == additive_energy({a + s for a in A}).value
        assert base == additive_energy({lam * a for a in A}).value
        assert multiplicative_energy(C).value == \
            multiplicative_energy({lam * c for c in C}).value


def _inv_log_map(rng, threads):
    for _ in range(20):
        X = frozenset(rng.sample(range(0, 26), rng.randint(1, 12)))
        powers = {Fraction(1 << x) for x in X}
        assert multiplicative_energy(powers).value == additive_energy(X).value


def _inv_cartesian_bound(rng, threads):
    for _ in range(100):
        C = _random_scalars(rng, 20, nonzero=True)
        D = _random_scalars(rng, 20)
        rep = cartesian_line_energy_bound(C, D, threads)
        assert rep.holds
        assert rep.line_energy >= (len(C) * len(D)) ** 2


def _inv_prnrw_diagnostic(rng, threads):
    cases = [frozenset(_elekes(64).lines), _random_lines(rng, 60)]
    cases.append(frozenset(Line(c, d) for c in range(1, 11) for d in range(20)))
    for L in cases:
        if len(L) < 2:
            continue
        rep = prnrw_bound_report(L, threads)
        assert rep.energy <= 10 * rep.bound, \
            f"E={rep.energy} above 10x bound {rep.bound:.3e}"


def _inv_totient_definitional(rng, threads):
    table = totient_table(2000)
    for i in range(1, 2001):
        definitional = sum(1 for a in range(1, i) if math.gcd(a, i) == 1) if i > 1 else 1
        assert int(table.phi[i]) == definitional, f"phi({i})"


def _inv_totient_sums(rng, threads):
    for r in (10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6):
        rep = totient_sum_report(r)
        assert abs(rep.sum_phi - rep.ref_quadratic) <= 2 * r * math.log(r)
        ratio = rep.ratio_sum if rep.ratio_sum is not None else rep.ratio_sum_decimal
        assert ratio <= 1 + math.log(r)


def _inv_family_counts(rng, threads):
    for n in (2 ** 12, 2 ** 16, 2 ** 20):
        cfg = _family(n)
        assert len(cfg.lines) == family_line_count_formula(n, ALPHA)
        slopes = slope_set(cfg.lines)
        assert len(slopes) == family_slope_count_formula(n, ALPHA)
        sample = sorted(slopes)[: 50]
        for s in sample:
            assert s > 0
            assert math.gcd(s.numerator, s.denominator) == 1
    for cfg in (_elekes(64), build_geometric(64)):
        assert len(cfg.lines) == len(set(cfg.lines))


def _inv_product_vs_oracle(rng, threads):
    for _ in range(100):
        A = _random_scalars(rng, 40)
        B = _random_scalars(rng, 40)
        L = _random_lines(rng, 200)
        prof = count_incidences_product(A, B, L, threads)
        pts = [Point(a, b) for a in sorted(A) for b in sorted(B)]
        assert prof.total == count_incidences_oracle(pts, L)
        assert prof.total == sum(c for _, c in prof.per_line)
        assert sum(prof.histogram.values()) == len(L)


def _inv_st_shape(rng, threads):
    cases = [_elekes(64), _elekes(512), _family(2 ** 12), build_geometric(64)]
    for cfg in cases:
        total = count_incidences_product(cfg.A, cfg.B, cfg.lines, threads).total
        m = len(cfg.A) * len(cfg.B)
        nl = len(cfg.lines)
        assert total <= 10 * (m ** (2 / 3) * nl ** (2 / 3) + m + nl)
    for _ in range(20):
        A = _random_scalars(rng, 30)
        B = _random_scalars(rng, 30)
        L = _random_lines(rng, 100)
        total = count_incidences_product(A, B, L, threads).total
        m = len(A) * len(B)
        assert total <= 10 * (m ** (2 / 3) * len(L) ** (2 / 3) + m + len(L))


def _inv_rich_lines(rng, threads):
    pts = [Point(x, y) for x in range(5) for y in range(5)]
    for r in (3, 4, 5):
        rep = enumerate_rich_lines(pts, r)
        for entry, count in rep.entries:
            if isinstance(entry, VerticalLine):
                on = [p for p in pts if p.x == entry.x]
            else:
                on = [p for p in pts if line_eval(entry, p.x) == p.y]
            assert len(on) == count and count >= r
    lines_by_r = {r: {e for e, _ in enumerate_rich_lines(pts, r).entries}
                  for r in (3, 4, 5)}
    assert lines_by_r[5] <= lines_by_r[4] <= lines_by_r[3]
    # completeness: every pair-spanned line with >= r points gets reported
    rand_pts = sorted({Point(rng.randint(0, 6), rng.randint(0, 6))
                       for _ in range(12)})
    reported = {e for e, _ in enumerate_rich_lines(rand_pts, 3).entries}
    for i, p in enumerate(rand_pts):
        for q in rand_pts[i + 1:]:
            if p.x == q.x:
                entry = VerticalLine(p.x)
                on = [s for s in rand_pts if s.x == p.x]
            else:
                slope = (q.y - p.y) / (q.x - p.x)
                entry = Line(slope, p.y - slope * p.x)
                on = [s for s in rand_pts if line_eval(entry, s.x) == s.y]
            if len(on) >= 3:
                assert entry in reported, f"missing rich line {entry}"
    band_all = prune_richness_band(range(4), range(4), _random_lines(rng, 30),
                                   0, 10 ** 9)
    assert len(band_all) >= 0  # identity band never raises


def _inv_structure_partition(rng, threads):
    for _ in range(20):
        L = _random_lines(rng, 40)
        fams = parallel_families(L)
        assert sum(len(ls) for _, ls in fams) == len(L)
        assert frozenset().union(*(ls for _, ls in fams)) == L
        for s, ls in fams:
            assert all(g.c == s for g in ls)


def _inv_concurrent_families(rng, threads):
    for _ in range(10):
        L = _random_lines(rng, 25)
        fams = concurrent_families(L, 2)
        used = set()
        for p, ls in fams:
            assert not (used & ls), "families share a line"
            used |= ls
            for g in ls:
                assert line_eval(g, p.x) == p.y, "line misses its pencil point"


def _inv_dyadic_pigeonhole(rng, threads):
    for _ in range(40):
        values = [rng.randint(1, 1 << 12) for _ in range(rng.randint(1, 30))]
        weights = [rng.randint(1, 100) for _ in values]
        prof = dyadic_profile(values, weights)
        total = sum(weights)
        nonempty = len(prof.bins)
        dom = dict((j, w) for j, _, w in prof.bins)[prof.dominant_j]
        assert dom * nonempty >= total, "pigeonhole guarantee"
        assert sum(m for _, m, _ in prof.bins) == len(values)


def _inv_iterative_replay(rng, threads):
    cfg = _elekes(64)
    events = iterative_decomposition(cfg, 8, 3, Fraction(1, 100))
    assert [e.kind for e in events] == ["parallel"] * 4
    assert all(e.size == 16 for e in events)
    removed = frozenset().union(*(e.lines for e in events))
    assert removed == cfg.lines, "replaying the log must empty the line set"
    total = count_incidences_product(cfg.A, cfg.B, cfg.lines).total
    assert sum(e.incidences for e in events) == total


def _inv_structure_reports(rng, threads):
    rep = structure_report(_elekes(512), threads=threads)
    for fam in rep.selected:
        y = fam.size
        assert y * y <= fam.intercept_energy <= y ** 3
    geo = structure_report(build_geometric(64), threads=threads)
    assert geo.t == 1
    assert geo.mult_energy_slopes == interval_additive_energy(64 // 2 + 1)


def _inv_config_roundtrip(rng, threads):
    from .fileio import config_to_dict, dict_to_config
    for cfg in (_elekes(64), build_geometric(8), _family(2 ** 12)):
        back = dict_to_config(config_to_dict(cfg))
        assert back == cfg, "configuration JSON round-trip"


INVARIANTS = [
    ("core.group_axioms", _inv_group_axioms),
    ("energies.energy_bounds", _inv_energy_bounds),
    ("energies.oracle_equivalence", _inv_oracle_equivalence),
    ("energies.bipartite_cauchy_schwarz", _inv_bipartite_cauchy_schwarz),
    ("energies.line_energy_bounds", _inv_line_energy_bounds),
    ("energies.invariance", _inv_invariance),
    ("energies.log_map", _inv_log_map),
    ("energies.cartesian_bound", _inv_cartesian_bound),
    ("energies.prnrw_diagnostic", _inv_prnrw_diagnostic),
    ("constructions.totient_definitional", _inv_totient_definitional),
    ("constructions.totient_sums", _inv_totient_sums),
    ("constructions.family_counts", _inv_family_counts),
    ("incidence.product_vs_oracle", _inv_product_vs_oracle),
    ("incidence.st_shape", _inv_st_shape),
    ("incidence.rich_lines", _inv_rich_lines),
    ("structure.parallel_partition", _inv_structure_partition),
    ("structure.concurrent_families", _inv_concurrent_families),
    ("structure.dyadic_pigeonhole", _inv_dyadic_pigeonhole),
    ("structure.iterative_replay", _inv_iterative_replay),
    ("structure.reports", _inv_structure_reports),
    ("cli.config_roundtrip", _inv_config_roundtrip),
]


def criterion_12(seed=0, threads=None, **_) -> CheckResult:
    def run():
        failures = []
        for offset in (0, 1, 2):
            for name, fn in INVARIANTS:
                rng = random.Random(seed + offset)
                try:
                    fn(rng, threads)
                except AssertionError as exc:
                    failures.append(f"{name}[seed {seed + offset}]: {exc}")
        assert not failures, "; ".join(failures)
        return f"{len(INVARIANTS)} invariants green under seeds " \
               f"{seed}, {seed + 1}, {seed + 2}"
    return _check(12, "property suite", run)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
            criterion_11, criterion_12]


def run_all(only=None, seed: int = 0, threads=None, stream=None):
    """Run the acceptance criteria; returns (results, all_ok)."""
    import sys
    out = stream or sys.stdout
    results = []
    for idx, fn in enumerate(CRITERIA, start=1):
        if only and idx not in only:
            continue
        result = fn(seed=seed, threads=threads)
        results.append(result)
        print(result.line(), file=out, flush=True)
    ok = all(r.ok for r in results)
    print(f"{'ALL PASS' if ok else 'FAILURES PRESENT'} "
          f"({sum(r.ok for r in results)}/{len(results)})", file=out)
    return results, ok
