"""Structural pipelines: family detection, dyadic profiling, and reports.

The central move is operationalizing "about n^beta of something" claims:
group, weigh each group by the incidences it carries, bin the group sizes
dyadically (bin j holds sizes in [2^j, 2^(j+1))), and read the exponent off
the dominant bin.  The same machinery is applied twice: once to parallel
family sizes (beta) and once to the additive energies of each family's
y-intercept set (the representative t).  The slopes S of the t-selected
families then feed a multiplicative-energy computation.

All reference quantities involving logarithms use the natural log; reports
carry a log_base tag saying so.
"""

from __future__ import annotations

import heapq
import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import CapExceededError, InputError, Point, line_intersection
from .energies import additive_energy, as_line_set, multiplicative_energy
from .incidence import (count_incidences_product, default_richness_band,
                        prune_richness_band)

CONCURRENT_LINE_CAP = 8192

LOG_BASE = "e"


def parallel_families(L):
    """Group lines by exact slope; largest family first, ties by slope."""
    groups = defaultdict(set)
    for g in as_line_set(L):
        groups[g.c].add(g)
    return sorted(((s, frozenset(ls)) for s, ls in groups.items()),
                  key=lambda e: (-len(e[1]), e[0]))


def _intersection_points(lines):
    """Map point -> set of lines through it (pairwise intersections only)."""
    through = defaultdict(set)
    for i, g in enumerate(lines):
        for h in lines[i + 1:]:
            p = line_intersection(g, h)
            if isinstance(p, Point):
                through[p].update((g, h))
    return through


def concurrent_families(L, min_size: int, cap: int = CONCURRENT_LINE_CAP):
    """Greedy line-disjoint pencils of at least min_size concurrent lines.

    Repeatedly takes the point with the most unused lines through it
    (ties by point order), consuming those lines so families never share
    a line.  A lazy max-heap re-keys points as their lines get consumed.
    """
    if min_size < 2:
        raise InputError("concurrent family min_size must be at least 2")
    lines = sorted(as_line_set(L))
    if len(lines) > cap:
        raise CapExceededError(f"{len(lines)} lines exceed concurrency cap {cap}")
    through = _intersection_points(lines)
    unused = set(lines)
    heap = [(-len(ls), p) for p, ls in through.items()]
    heapq.heapify(heap)
    families = []
    while heap:
        neg_size, p = heapq.heappop(heap)
        avail = through[p] & unused
        if len(avail) < min_size:
            continue  # avail only shrinks; this point is done for good
        if len(avail) != -neg_size:
            heapq.heappush(heap, (-len(avail), p))  # stale key, retry later
            continue
        families.append((p, frozenset(avail)))
        unused -= avail
    return families


@dataclass(frozen=True)
class DyadicProfile:
    bins: tuple  # ((j, member_count, weight_sum), ...) ascending j
    dominant_j: int

    def exponent(self, n: int) -> float:
        """log_n of the dominant bin's scale 2^j."""
        return self.dominant_j * math.log(2) / math.log(n)

    def members_of_dominant(self, values):
        return [i for i, v in enumerate(values)
                if v.bit_length() - 1 == self.dominant_j]


def dyadic_profile(values, weights=None) -> DyadicProfile:
    """Bin positive integers by floor(log2), pick the heaviest bin.

    Ties break toward the smaller exponent j so reports are deterministic.
    """
    values = list(values)
    if not values:
        raise InputError("dyadic profile of no values")
    if any((not isinstance(v, int)) or v <= 0 for v in values):
        raise InputError("dyadic profile needs positive integers")
    if weights is None:
        weights = [1] * len(values)
    if len(weights) != len(values):
        raise InputError("weights must match values")
    members = Counter()
    weight = Counter()
    for v, w in zip(values, weights):
        j = v.bit_length() - 1  # floor(log2 v)
        members[j] += 1
        weight[j] += w
    dominant = max(weight, key=lambda j: (weight[j], -j))
    bins = tuple((j, members[j], weight[j]) for j in sorted(members))
    return DyadicProfile(bins, dominant)


@dataclass(frozen=True)
class FamilyInventory:
    parallel: tuple  # ((slope, lines), ...) largest first
    concurrent: tuple  # ((point, lines), ...) greedy order, line-disjoint
    leftovers: frozenset  # lines in no concurrent family


@dataclass(frozen=True)
class SelectedFamily:
    slope: Fraction
    size: int
    incidences: int
    intercept_energy: int


@dataclass(frozen=True)
class StructureReport:
    n: int
    alpha: Optional[Fraction]
    band: tuple
    branch: str  # "parallel" | "concurrent" | "degenerate"
    degenerate: bool
    beta: Optional[float]
    gamma: Optional[float]
    t: Optional[int]
    families_used: int
    selected: tuple  # SelectedFamily rows in the dominant t-bin
    slopes: tuple  # S, sorted
    mult_energy_slopes: Optional[int]
    product: Optional[int]  # Ex(S) * t
    ref_power: Optional[float]  # n^(3-alpha)
    ref_power_over_log12: Optional[float]  # n^(3-alpha) / ln(n)^12
    inventory: FamilyInventory
    log_base: str = LOG_BASE


def _family_rows(families, counts):
    """(slope, lines, size, incidences) per family, given per-line counts."""
    rows = []
    for slope, lines in families:
        inc = sum(counts[g] for g in lines)
        rows.append((slope, lines, len(lines), inc))
    return rows


def _beta_t_selection(families, counts, n):
    """The dyadic beta/t pipeline shared by the structure reports.

    Returns (beta, t, selected SelectedFamily rows); families must be
    nonempty.
    """
    rows = _family_rows(families, counts)
    sizes = [size for _, _, size, _ in rows]
    weights = [inc for _, _, _, inc in rows]
    beta_prof = dyadic_profile(sizes, weights)
    beta = beta_prof.exponent(n)
    beta_rows = [rows[i] for i in beta_prof.members_of_dominant(sizes)]

    energies = []
    for slope, lines, size, inc in beta_rows:
        intercepts = {g.d for g in lines}
        energies.append(additive_energy(intercepts).value)
    t_prof = dyadic_profile(energies, [inc for _, _, _, inc in beta_rows])
    chosen_idx = t_prof.members_of_dominant(energies)
    selected = tuple(
        SelectedFamily(beta_rows[i][0], beta_rows[i][2], beta_rows[i][3],
                       energies[i])
        for i in chosen_idx)
    t = min(f.intercept_energy for f in selected)
    return beta, t, selected


def structure_report(cfg, min_size: int = 2, band=None, threads=None) -> StructureReport:
    """Run the full parallel/concurrent structure pipeline on a configuration.

    Steps: richness-prune to the band, group parallel families, dyadic-bin
    sizes (beta), dyadic-bin intercept energies (t), collect slopes S,
    compute Ex(S) * t next to its reference shapes, and separately report
    the concurrent-family inventory.
    """
    profile = count_incidences_product(cfg.A, cfg.B, cfg.lines, threads)
    if band is None:
        band = default_richness_band(profile)
    pruned = prune_richness_band(cfg.A, cfg.B, cfg.lines, band[0], band[1],
                                 threads)
    counts = {g: c for g, c in profile.per_line}
    n = cfg.meta.n
    alpha = cfg.meta.alpha

    families = parallel_families(pruned)
    try:
        concurrent = concurrent_families(pruned, max(2, min_size))
    except CapExceededError:
        concurrent = []
    used = set().union(*(f for _, f in concurrent)) if concurrent else set()
    inventory = FamilyInventory(tuple(families), tuple(concurrent),
                                frozenset(pruned) - used)
    gamma = None
    if concurrent:
        gamma = dyadic_profile(
            [len(f) for _, f in concurrent],
            [sum(counts[g] for g in f) for _, f in concurrent]).exponent(n)

    if not families:
        return StructureReport(n, alpha, tuple(band),
                               "concurrent" if concurrent else "degenerate",
                               True, None, gamma, None, 0, (), (), None, None,
                               None, None, inventory)

    beta, t, selected = _beta_t_selection(families, counts, n)
    slopes = tuple(sorted(f.slope for f in selected))
    ex_s = multiplicative_energy(slopes, threads).value
    product = ex_s * t
    ref = ref_log = None
    if alpha is not None:
        ref = float(n) ** float(3 - alpha)
        ref_log = ref / math.log(n) ** 12
    return StructureReport(n, alpha, tuple(band), "parallel", False, beta,
                           gamma, t, len(selected), selected, slopes, ex_s,
                           product, ref, ref_log, inventory)


@dataclass(frozen=True)
class RemovalEvent:
    kind: str  # "parallel" | "concurrent"
    key: object  # slope or point
    size: int
    incidences: int
    lines: frozenset


def iterative_decomposition(cfg, parallel_min: int, concurrent_min: int,
                            stop_fraction, threads=None):
    """Peel families off a configuration, logging each removal.

    While the surviving incidence count is at least stop_fraction of the
    original: remove the largest parallel family if it has at least
    parallel_min lines, else the largest concurrent family if at least
    concurrent_min, else stop.  Returns the ordered event log.
    """
    if parallel_min < 1 or concurrent_min < 1:
        raise InputError("family thresholds must be positive")
    stop_fraction = Fraction(stop_fraction)
    if not 0 < stop_fraction < 1:
        raise InputError("stop_fraction must lie in (0, 1)")
    profile = count_incidences_product(cfg.A, cfg.B, cfg.lines, threads)
    counts = {g: c for g, c in profile.per_line}
    original = profile.total
    remaining = set(cfg.lines)
    remaining_inc = original
    events = []
    while remaining and remaining_inc >= stop_fraction * original:
        event = None
        families = parallel_families(remaining)
        if families and len(families[0][1]) >= parallel_min:
            slope, fam = families[0]
            event = RemovalEvent("parallel", slope, len(fam),
                                 sum(counts[g] for g in fam), fam)
        else:
            pencils = concurrent_families(remaining, concurrent_min)
            if pencils:
                point, fam = pencils[0]  # greedy order: largest first
                event = RemovalEvent("concurrent", point, len(fam),
                                     sum(counts[g] for g in fam), fam)
        if event is None:
            break
        events.append(event)
        remaining -= event.lines
        remaining_inc -= event.incidences
    return events


@dataclass(frozen=True)
class ElekesReport:
    n: int  # |A|
    alpha_rich: Fraction
    k: int
    degenerate: bool
    beta: Optional[float]
    t: Optional[int]
    families_used: int
    selected: tuple
    slopes: tuple
    mult_energy_slopes: Optional[int]
    rhs_bound: Optional[float]  # n^(1/4) t^(1/4) Ex(S)^(1/4) ln(n)^3 / a^(3/2)
    log_base: str = LOG_BASE


def elekes_report(A, L, alpha_rich, threads=None) -> ElekesReport:
    """Rich-line structure over the square grid A x A.

    Keeps the lines incident to at least alpha_rich * |A| points of A x A,
    then runs the beta/t/S pipeline on them and reports k against the
    n^(1/4) t^(1/4) Ex(S)^(1/4) ln(n)^3 / alpha_rich^(3/2) shape.
    """
    alpha_rich = Fraction(alpha_rich)
    if not 0 < alpha_rich <= 1:
        raise InputError("alpha_rich must lie in (0, 1]")
    a_vals = frozenset(Fraction(v) for v in A)
    n = len(a_vals)
    profile = count_incidences_product(a_vals, a_vals, L, threads)
    threshold = alpha_rich * n
    kept = {g: c for g, c in profile.per_line if c >= threshold}
    k = len(kept)
    if k == 0:
        return ElekesReport(n, alpha_rich, 0, True, None, None, 0, (), (),
                            None, None)
    families = parallel_families(kept)
    beta, t, selected = _beta_t_selection(families, kept, max(2, k))
    slopes = tuple(sorted(f.slope for f in selected))
    ex_s = multiplicative_energy(slopes, threads).value
    rhs = (n ** 0.25 * t ** 0.25 * float(ex_s) ** 0.25 * math.log(n) ** 3
           / float(alpha_rich) ** 1.5)
    return ElekesReport(n, alpha_rich, k, False, beta, t, len(selected),
                        selected, slopes, ex_s, rhs)
