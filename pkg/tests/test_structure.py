from fractions import Fraction

import pytest

from inclab.constructions import (Configuration, ConfigMeta, build_elekes,
                                  build_family, build_geometric)
from inclab.core import InputError, Line, Point, line_eval
from inclab.energies import additive_energy
from inclab.incidence import count_incidences_product
from inclab.structure import (concurrent_families, dyadic_profile,
                              elekes_report, iterative_decomposition,
                              parallel_families, structure_report)

INTERVAL_ENERGY_64 = 174784  # (2*64^3 + 64) / 3
INTERVAL_ENERGY_33 = 23969  # (2*33^3 + 33) / 3


class TestParallelFamilies:
    def test_elekes(self):
        fams = parallel_families(build_elekes(64).lines)
        assert [len(ls) for _, ls in fams] == [16] * 4
        assert [s for s, _ in fams] == [1, 2, 3, 4]

    def test_geometric(self):
        fams = parallel_families(build_geometric(64).lines)
        assert [len(ls) for _, ls in fams] == [1] * 33

    def test_mixed(self):
        fams = parallel_families([Line(1, 0), Line(1, 1), Line(2, 0)])
        assert [(s, len(ls)) for s, ls in fams] == [(1, 2), (2, 1)]

    def test_partition(self):
        lines = build_elekes(64).lines
        fams = parallel_families(lines)
        assert frozenset().union(*(ls for _, ls in fams)) == lines
        assert sum(len(ls) for _, ls in fams) == len(lines)


class TestConcurrentFamilies:
    def test_origin_pencil(self):
        fams = concurrent_families([Line(1, 0), Line(2, 0), Line(3, 0)], 3)
        assert len(fams) == 1
        point, lines = fams[0]
        assert point == Point(0, 0) and len(lines) == 3

    def test_elekes_spread(self):
        fams = concurrent_families(build_elekes(64).lines, 5)
        # grid lines are spread: any pencils found stay small
        assert all(len(ls) < 8 for _, ls in fams)
        for p, ls in fams:
            assert all(line_eval(g, p.x) == p.y for g in ls)

    def test_shared_line_consumed_once(self):
        pencil_a = [Line(1, 0), Line(2, 0), Line(3, 0)]  # through (0, 0)
        pencil_b = [Line(1, 0), Line(Fraction(1, 2), 3), Line(5, -24)]  # (6, 6)
        fams = concurrent_families(set(pencil_a + pencil_b), 2)
        assert [len(ls) for _, ls in fams] == [3, 2]
        used = [g for _, ls in fams for g in ls]
        assert len(used) == len(set(used))

    def test_min_size_validation(self):
        with pytest.raises(InputError):
            concurrent_families([Line(1, 0)], 1)


class TestDyadicProfile:
    def test_single_bin(self):
        prof = dyadic_profile([16, 16, 16, 16])
        assert prof.dominant_j == 4
        assert prof.bins == ((4, 4, 4),)

    def test_tie_breaks_low(self):
        prof = dyadic_profile([1, 2, 4, 8])
        assert prof.dominant_j == 0
        assert len(prof.bins) == 4

    def test_elekes_family_sizes(self):
        sizes = [len(ls) for _, ls in parallel_families(build_elekes(64).lines)]
        assert dyadic_profile(sizes).dominant_j == 4

    def test_pigeonhole_guarantee(self):
        values = [3, 9, 17, 33, 65, 129]
        weights = [5, 1, 2, 8, 1, 1]
        prof = dyadic_profile(values, weights)
        dominant_weight = dict((j, w) for j, _, w in prof.bins)[prof.dominant_j]
        assert dominant_weight * len(prof.bins) >= sum(weights)

    def test_exponent(self):
        prof = dyadic_profile([64])
        assert prof.exponent(512) == pytest.approx(Fraction(6, 9))

    def test_validation(self):
        with pytest.raises(InputError):
            dyadic_profile([])
        with pytest.raises(InputError):
            dyadic_profile([0, 1])
        with pytest.raises(InputError):
            dyadic_profile([1, 2], [1])


class TestStructureReport:
    def test_elekes_512(self):
        rep = structure_report(build_elekes(512))
        assert rep.branch == "parallel" and not rep.degenerate
        assert [len(ls) for _, ls in rep.inventory.parallel] == [64] * 8
        assert rep.beta == pytest.approx(2 / 3)
        # intercept sets are {1..64}
        assert additive_energy(range(1, 65)).value == INTERVAL_ENERGY_64
        assert [f.intercept_energy for f in rep.selected] == [INTERVAL_ENERGY_64] * 8
        assert rep.t == INTERVAL_ENERGY_64
        assert rep.slopes == tuple(Fraction(s) for s in range(1, 9))
        assert rep.product == rep.mult_energy_slopes * rep.t
        assert rep.ref_power == pytest.approx(512.0 ** (3 - 1 / 3))

    def test_geometric(self):
        rep = structure_report(build_geometric(64))
        assert rep.beta == 0.0
        assert rep.t == 1
        assert rep.mult_energy_slopes == INTERVAL_ENERGY_33
        assert rep.families_used == 33
        assert rep.ref_power is None

    def test_degenerate(self):
        cfg = build_family(2048, Fraction(5, 12))  # empty line set
        rep = structure_report(cfg)
        assert rep.degenerate and rep.branch == "degenerate"
        assert rep.selected == () and rep.t is None

    def test_selected_energy_bounds(self):
        rep = structure_report(build_elekes(512))
        for fam in rep.selected:
            assert fam.size ** 2 <= fam.intercept_energy <= fam.size ** 3

    def test_family_configuration(self):
        from inclab.energies import quadruple_oracle

        rep = structure_report(build_family(2 ** 20, Fraction(5, 12)))
        assert rep.branch == "parallel"
        # six slope families: 2 of size 1624 (bin 10), 4 of size 2436 (bin 11)
        sizes = sorted(len(ls) for _, ls in rep.inventory.parallel)
        assert sizes == [1624, 1624, 2436, 2436, 2436, 2436]
        assert rep.beta == pytest.approx(11 / 20)
        assert rep.slopes == (Fraction(1, 3), Fraction(2, 3),
                              Fraction(4, 3), Fraction(5, 3))
        assert rep.mult_energy_slopes == quadruple_oracle(
            "multiplicative", A=rep.slopes) == 32


class TestIterativeDecomposition:
    def test_elekes_64_parallel_events(self):
        events = iterative_decomposition(build_elekes(64), 8, 3, Fraction(1, 100))
        assert [(e.kind, e.size) for e in events] == [("parallel", 16)] * 4

    def test_no_families_stops_immediately(self):
        cfg = Configuration(
            frozenset([Fraction(0)]), frozenset([Fraction(0)]),
            frozenset([Line(1, 0), Line(2, 1), Line(3, 5)]),
            ConfigMeta("adhoc", 3, None))
        events = iterative_decomposition(cfg, 2, 3, Fraction(1, 2))
        assert events == []

    def test_stop_fraction_crossing(self):
        cfg = build_elekes(512)
        events = iterative_decomposition(cfg, 8, 3, Fraction(1, 2))
        total = count_incidences_product(cfg.A, cfg.B, cfg.lines).total
        removed = [e.incidences for e in events]
        assert sum(removed[:-1]) <= total // 2 < sum(removed)

    def test_replay(self):
        cfg = build_elekes(64)
        events = iterative_decomposition(cfg, 8, 3, Fraction(1, 100))
        stripped = cfg.lines.difference(*(e.lines for e in events))
        assert stripped == frozenset()
        total = count_incidences_product(cfg.A, cfg.B, cfg.lines).total
        assert sum(e.incidences for e in events) == total

    def test_concurrent_branch(self):
        cfg = build_geometric(8)  # all lines meet at the origin
        events = iterative_decomposition(cfg, 2, 3, Fraction(1, 100))
        assert events[0].kind == "concurrent"
        assert events[0].key == Point(0, 0)
        assert events[0].size == len(cfg.lines)

    def test_threshold_validation(self):
        cfg = build_geometric(8)
        with pytest.raises(InputError):
            iterative_decomposition(cfg, 0, 3, Fraction(1, 2))
        with pytest.raises(InputError):
            iterative_decomposition(cfg, 1, 1, Fraction(3, 2))


class TestElekesReport:
    def test_geometric_end_to_end(self):
        cfg = build_geometric(64)
        rep = elekes_report(cfg.A, cfg.lines, Fraction(1, 2))
        assert rep.k == 33
        assert rep.t == 1
        assert rep.mult_energy_slopes == INTERVAL_ENERGY_33
        assert rep.rhs_bound > 0

    def test_full_richness(self):
        cfg = build_geometric(64)
        rep = elekes_report(cfg.A, cfg.lines, 1)
        assert rep.k == 1  # only y = x hits all 64 diagonal points

    def test_grid_mismatch_flags_empty(self):
        lines = build_elekes(64).lines  # intercepts >= 1 overshoot {1..4}^2
        rep = elekes_report([1, 2, 3, 4], lines, 1)
        assert rep.degenerate and rep.k == 0

    def test_alpha_validation(self):
        with pytest.raises(InputError):
            elekes_report([1, 2], [Line(1, 0)], 2)
