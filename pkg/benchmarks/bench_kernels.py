#!/usr/bin/env python3
"""Benchmark the compiled kernel backend against the pure numpy fallback.

Times the three hot pair-enumeration paths on construction-sized inputs:

  * line-quotient collision tables (line energy),
  * cross-sum collision tables (additive energy),
  * product-grid incidence counting.

Run:  python3 benchmarks/bench_kernels.py [--quick]
"""

import argparse
import time
from fractions import Fraction

import numpy as np

import inclab.kernels as kernels
from inclab.kernels import _pure
from inclab.kernels._tables import merge_into

try:
    from inclab.kernels import _speedups
except ImportError:
    _speedups = None

from inclab.constructions import build_elekes, build_family


def _line_arrays(lines):
    ls = sorted(lines)
    to = lambda f: np.array(f, dtype=np.int64)
    return (to([g.c.numerator for g in ls]), to([g.c.denominator for g in ls]),
            to([g.d.numerator for g in ls]), to([g.d.denominator for g in ls]))


def _time_table(backend, kernel_name, args, n_rows, row_width):
    fn = getattr(backend, kernel_name)
    step = max(1, kernels.CHUNK_PAIRS // max(1, row_width))
    t0 = time.perf_counter()
    table = {}
    for lo in range(0, n_rows, step):
        cols, counts = fn(*args, lo, min(lo + step, n_rows))
        merge_into(table, cols, counts)
    elapsed = time.perf_counter() - t0
    energy = sum(m * m for m in table.values())
    return elapsed, energy


def _time_incidence(backend, xs, bs, arrs):
    t0 = time.perf_counter()
    total = 0
    n = len(arrs[0])
    step = max(1, kernels.CHUNK_PAIRS // max(1, len(xs)))
    for lo in range(0, n, step):
        counts = backend.product_incidence_counts(xs, bs, *arrs, lo,
                                                  min(lo + step, n))
        total += int(counts.sum())
    return time.perf_counter() - t0, total


def bench(quick: bool):
    backends = [("python", _pure)]
    if _speedups is not None:
        backends.append(("c", _speedups))
    else:
        print("compiled backend unavailable; timing the fallback only")

    elekes_n = 1000 if quick else 4096
    family_n = 2 ** 20 if quick else 2 ** 24

    cfg = build_elekes(elekes_n)
    arrs = _line_arrays(cfg.lines)
    k = len(cfg.lines)
    print(f"\nline-quotient table: {k} lines, {k * k:,} ordered pairs")
    rows = []
    for name, backend in backends:
        elapsed, energy = _time_table(backend, "line_quotient_table", arrs, k, k)
        rows.append((name, elapsed, energy))
        print(f"  {name:>8}: {elapsed:8.2f}s   E = {energy}")
    _summarize(rows)

    m = 2048 if quick else 4096
    vals = np.arange(1, m + 1, dtype=np.int64)
    print(f"\ncross-sum table: {m} values, {m * m:,} ordered pairs")
    rows = []
    for name, backend in backends:
        elapsed, energy = _time_table(backend, "cross_sum_table", (vals, vals),
                                      m, m)
        rows.append((name, elapsed, energy))
        print(f"  {name:>8}: {elapsed:8.2f}s   E+ = {energy}")
    _summarize(rows)

    fam = build_family(family_n, Fraction(5, 12))
    arrs = _line_arrays(fam.lines)
    xs = np.array([int(v) for v in sorted(fam.A)], dtype=np.int64)
    bs = np.sort(np.array([int(v) for v in sorted(fam.B)], dtype=np.int64))
    pairs = len(fam.lines) * len(xs)
    print(f"\nincidence counts: {len(fam.lines)} lines x {len(xs)} columns "
          f"({pairs:,} evaluations)")
    rows = []
    for name, backend in backends:
        elapsed, total = _time_incidence(backend, xs, bs, arrs)
        rows.append((name, elapsed, total))
        print(f"  {name:>8}: {elapsed:8.2f}s   incidences = {total}")
    _summarize(rows)


def _summarize(rows):
    if len(rows) == 2:
        assert rows[0][2] == rows[1][2], "backends disagree!"
        ratio = rows[0][1] / rows[1][1] if rows[1][1] else float("inf")
        print(f"  speedup (python/c): {ratio:5.2f}x")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="smaller inputs")
    bench(ap.parse_args().quick)
