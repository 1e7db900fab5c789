import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from inclab.core import CapExceededError, DomainError, InputError, Line
from inclab.energies import (additive_energy, bipartite_additive_energy,
                             bipartite_via_difference_profiles,
                             cartesian_line_energy_bound, line_energy,
                             multiplicative_energy, prnrw_bound_report,
                             quadruple_oracle, rs_incidence_bound_report)


def closed_form_interval_energy(m):
    # E+ of an m-term arithmetic progression
    return (2 * m ** 3 + m) // 3


class TestAdditive:
    def test_singleton(self):
        assert additive_energy([0]).value == 1

    def test_two_elements(self):
        # 16 quadruples enumerated by the oracle
        assert quadruple_oracle("additive", A=[1, 2]) == 6
        assert additive_energy([1, 2]).value == 6

    def test_interval(self):
        rep = additive_energy(range(1, 11))
        assert rep.value == 670 == closed_form_interval_energy(10)

    def test_empty_rejected(self):
        with pytest.raises(InputError):
            additive_energy([])

    def test_bounds_fields(self):
        rep = additive_energy([1, 2, 4])
        assert rep.value >= rep.support
        assert rep.bound("|A|^2") == 9
        assert rep.bound("|A|^3") == 27
        assert rep.bound("|A|^4/|A+A|") == Fraction(81, rep.support)


class TestMultiplicative:
    def test_singleton(self):
        assert multiplicative_energy([1]).value == 1

    def test_small_set(self):
        assert quadruple_oracle("multiplicative", A=[1, 2, 3, 4]) == 32
        assert multiplicative_energy([1, 2, 3, 4]).value == 32

    def test_powers_of_two_log_map(self):
        # geometric set maps to the additive energy of its exponents
        val = multiplicative_energy([2, 4, 8, 16]).value
        assert val == quadruple_oracle("multiplicative", A=[2, 4, 8, 16])
        assert val == additive_energy([1, 2, 3, 4]).value == 44

    def test_zero_rejected(self):
        with pytest.raises(InputError):
            multiplicative_energy([0, 1])


class TestBipartite:
    def test_equal_sets_reduce_to_additive(self):
        assert bipartite_additive_energy([1, 2], [1, 2]).value == \
            additive_energy([1, 2]).value == 6

    def test_tiny_cross(self):
        assert quadruple_oracle("bipartite", A=[0, 1], B=[5]) == 2
        assert bipartite_additive_energy([0, 1], [5]).value == 2

    def test_cauchy_schwarz(self):
        a, b = [1, 2, 3], [10, 20]
        eab = bipartite_additive_energy(a, b).value
        assert eab == quadruple_oracle("bipartite", A=a, B=b)
        assert eab ** 2 <= additive_energy(a).value * additive_energy(b).value

    def test_difference_profile_identity(self):
        a = [Fraction(1, 3), 2, 5]
        b = [0, Fraction(7, 2)]
        assert bipartite_additive_energy(a, b).value == \
            bipartite_via_difference_profiles(a, b)

    def test_empty_rejected(self):
        with pytest.raises(InputError):
            bipartite_additive_energy([], [1])


class TestLineEnergy:
    def test_singleton(self):
        assert line_energy([Line(1, 0)]).value == 1

    def test_two_slopes(self):
        L = [Line(1, 0), Line(2, 0)]
        assert quadruple_oracle("line", L=L) == 6
        assert line_energy(L).value == 6

    def test_involution_pair(self):
        # slope -1 makes both cross quotients coincide
        L = [Line(1, 0), Line(-1, 1)]
        assert quadruple_oracle("line", L=L) == 8
        assert line_energy(L).value == 8

    def test_parallel_pair(self):
        L = [Line(1, 0), Line(1, 1)]
        assert quadruple_oracle("line", L=L) == 6
        assert line_energy(L).value == 6

    def test_horizontal_rejected(self):
        with pytest.raises(DomainError):
            line_energy([Line(0, 1), Line(1, 1)])

    def test_exact_fallback_matches_kernel_path(self):
        # huge intercepts push the computation onto the big-integer path
        small = [Line(1, 0), Line(2, 3), Line(Fraction(1, 2), -1)]
        big = [Line(g.c, g.d * 2 ** 80) for g in small]
        assert line_energy(small).value == line_energy(big).value  # dilation
        assert line_energy(big).value == quadruple_oracle("line", L=big)


class TestOracle:
    def test_trivial_values(self):
        assert quadruple_oracle("multiplicative", A=[3]) == 1

    def test_cap(self):
        with pytest.raises(CapExceededError):
            quadruple_oracle("additive", A=range(41))
        assert quadruple_oracle("additive", A=range(41), cap=41) > 0

    def test_unknown_kind(self):
        with pytest.raises(InputError):
            quadruple_oracle("cubic", A=[1])


class TestCartesianBound:
    def test_two_by_two(self):
        rep = cartesian_line_energy_bound([1, 2], [0, 1])
        lines = [Line(c, d) for c in (1, 2) for d in (0, 1)]
        assert rep.line_energy == quadruple_oracle("line", L=lines) == 32
        assert rep.product == 36
        assert rep.holds

    def test_degenerate(self):
        rep = cartesian_line_energy_bound([1], [0])
        assert rep.line_energy == 1 and rep.product == 1 and rep.holds

    def test_three_by_three(self):
        rep = cartesian_line_energy_bound([1, 2, 4], [0, 1, 2])
        lines = [Line(c, d) for c in (1, 2, 4) for d in (0, 1, 2)]
        assert rep.line_energy == quadruple_oracle("line", L=lines)
        assert rep.holds

    def test_zero_slope_rejected(self):
        with pytest.raises(InputError):
            cartesian_line_energy_bound([0, 1], [1])


class TestSlopePointBound:
    def test_parallel_pair(self):
        rep = prnrw_bound_report([Line(1, 0), Line(1, 1)])
        assert (rep.max_parallel, rep.max_concurrent) == (2, 1)
        assert rep.energy == 6

    def test_crossing_pair(self):
        rep = prnrw_bound_report([Line(1, 0), Line(2, 0)])
        assert (rep.max_parallel, rep.max_concurrent) == (1, 2)
        assert rep.energy == 6

    def test_pencil(self):
        rep = prnrw_bound_report([Line(1, 0), Line(2, 0), Line(4, 0)])
        assert rep.max_concurrent == 3

    def test_needs_two_lines(self):
        with pytest.raises(InputError):
            prnrw_bound_report([Line(1, 0)])


def test_incidence_energy_bound_report():
    from inclab.constructions import build_elekes
    cfg = build_elekes(64)
    rep = rs_incidence_bound_report(cfg.A, cfg.B, cfg.lines)
    assert rep.incidences == 128
    assert rep.line_energy == line_energy(cfg.lines).value
    assert rep.main_term > 0 and rep.secondary_term > 0


small_sets = st.sets(st.fractions(min_value=-9, max_value=9, max_denominator=6),
                     min_size=1, max_size=8)


@given(small_sets)
@settings(max_examples=60, deadline=None)
def test_additive_matches_oracle(A):
    assert additive_energy(A).value == quadruple_oracle("additive", A=A)


@given(small_sets)
@settings(max_examples=60, deadline=None)
def test_additive_bounds(A):
    k = len(A)
    rep = additive_energy(A)
    assert k * k <= rep.value <= k ** 3
    assert rep.value >= Fraction(k ** 4, rep.support)


@given(small_sets, st.fractions(min_value=-9, max_value=9, max_denominator=6),
       st.fractions(min_value=-9, max_value=9, max_denominator=6).filter(lambda q: q != 0))
@settings(max_examples=60, deadline=None)
def test_translation_dilation_invariance(A, s, lam):
    base = additive_energy(A).value
    assert additive_energy({a + s for a in A}).value == base
    assert additive_energy({lam * a for a in A}).value == base


@given(st.sets(st.integers(0, 24), min_size=1, max_size=8))
@settings(max_examples=40, deadline=None)
def test_log_map_transport(X):
    powers = {Fraction(2) ** x for x in X}
    assert multiplicative_energy(powers).value == additive_energy(X).value


def test_grid_line_energy_against_fraction_path():
    # dilating intercepts preserves quotient collisions but lands beyond the
    # int64 guard, forcing the Fraction-keyed path: an independent recount
    from inclab.constructions import build_elekes
    lines = build_elekes(512).lines
    fast = line_energy(lines)
    scaled = {Line(g.c, g.d * (2 ** 80 + 1)) for g in lines}
    slow = line_energy(scaled)
    assert (fast.value, fast.support) == (slow.value, slow.support)
    assert fast.value == 17813612


def test_partition_independence_of_threads():
    rng = random.Random(7)
    lines = {Line(Fraction(rng.randint(1, 9), rng.randint(1, 4)),
                  Fraction(rng.randint(-20, 20), rng.randint(1, 4)))
             for _ in range(120)}
    single = line_energy(lines, threads=1)
    multi = line_energy(lines, threads=4)
    assert (single.value, single.support) == (multi.value, multi.support)
