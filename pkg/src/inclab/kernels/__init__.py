"""Hot-loop kernels: compiled extension when available, numpy fallback otherwise.

The backend is chosen once at import.  Set INCLAB_PURE=1 to force the numpy
backend.  Both backends implement the same four chunk-level primitives and
are required to produce bit-identical tables; the high-level helpers here do
the chunking, optional threading, and exact big-integer reductions.

Everything below operates on int64 arrays.  Callers must check the fits_*
guards first (with exact Python-int arithmetic on the value bounds) and use
the slow exact paths in the calling module when a guard fails.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from ._tables import merge_into

if os.environ.get("INCLAB_PURE"):
    from . import _pure as backend
else:
    try:
        from . import _speedups as backend  # type: ignore[no-redef]
    except ImportError:
        from . import _pure as backend

BACKEND = backend.NAME

# int64 headroom: every intermediate product/sum a backend forms must stay
# strictly inside |x| <= 2**62.
_LIMIT = 1 << 62

# Default pairs per chunk; bounds peak memory around tens of MB per worker.
CHUNK_PAIRS = 1 << 22


def resolve_threads(threads=None) -> int:
    if threads is None:
        threads = int(os.environ.get("INCLAB_THREADS", "1") or 1)
    return max(1, int(threads))


def fits_sum(max_abs_u: int, max_abs_v: int) -> bool:
    return max_abs_u + max_abs_v <= _LIMIT


def fits_prod(max_abs_u: int, max_abs_v: int) -> bool:
    return max_abs_u * max_abs_v <= _LIMIT


def fits_quotient(max_cn: int, max_cd: int, max_dn: int, max_dd: int) -> bool:
    return (
        max_cn * max_cd <= _LIMIT
        and 2 * max_dn * max_dd * max_cd <= _LIMIT
        and max_dd * max_dd * max_cn <= _LIMIT
    )


def fits_incidence(max_x: int, max_b: int, max_cn: int, max_cd: int,
                   max_dn: int, max_dd: int) -> bool:
    return (
        max_cn * max_dd * max_x + max_dn * max_cd <= _LIMIT
        and max_cd * max_dd <= _LIMIT
        and max_b <= _LIMIT
    )


def _chunks(n_rows: int, row_width: int):
    step = max(1, CHUNK_PAIRS // max(1, row_width))
    return [(lo, min(lo + step, n_rows)) for lo in range(0, n_rows, step)]


def _run_chunks(fn, spans, threads):
    if threads <= 1 or len(spans) <= 1:
        return [fn(lo, hi) for lo, hi in spans]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda s: fn(*s), spans))


def _table_energy(table: dict):
    value = 0
    for m in table.values():
        value += m * m
    return value, len(table)


def _pairwise_table(kernel, args, n_rows, row_width, threads) -> dict:
    table: dict = {}
    spans = _chunks(n_rows, row_width)
    results = _run_chunks(lambda lo, hi: kernel(*args, lo, hi), spans, threads)
    for cols, counts in results:
        merge_into(table, cols, counts)
    return table


def sum_energy_int(u, v, threads=None):
    """(energy, support) of the cross-sum collision table of int64 arrays."""
    u = np.ascontiguousarray(u, dtype=np.int64)
    v = np.ascontiguousarray(v, dtype=np.int64)
    table = _pairwise_table(backend.cross_sum_table, (u, v), len(u), len(v),
                            resolve_threads(threads))
    return _table_energy(table)


def prod_energy_int(u, v, threads=None):
    """(energy, support) of the cross-product collision table."""
    u = np.ascontiguousarray(u, dtype=np.int64)
    v = np.ascontiguousarray(v, dtype=np.int64)
    table = _pairwise_table(backend.cross_prod_table, (u, v), len(u), len(v),
                            resolve_threads(threads))
    return _table_energy(table)


def diff_table_int(u, threads=None) -> dict:
    """Full difference-multiplicity table {u_i - u_j: count}."""
    u = np.ascontiguousarray(u, dtype=np.int64)
    return _pairwise_table(backend.cross_sum_table, (u, -u), len(u), len(u),
                           resolve_threads(threads))


def quotient_energy_int(cn, cd, dn, dd, threads=None):
    """(energy, support) of the line-quotient collision table.

    Arrays hold reduced slope cn/cd and intercept dn/dd per line, cd, dd > 0.
    """
    arrs = [np.ascontiguousarray(a, dtype=np.int64) for a in (cn, cd, dn, dd)]
    n = len(arrs[0])
    table = _pairwise_table(backend.line_quotient_table, tuple(arrs), n, n,
                            resolve_threads(threads))
    return _table_energy(table)


def incidence_counts_int(xs, b_vals, cn, cd, dn, dd, threads=None):
    """Per-line counts of x in xs with (cn/cd)*x + (dn/dd) in b_vals."""
    xs = np.ascontiguousarray(xs, dtype=np.int64)
    b_sorted = np.sort(np.asarray(b_vals, dtype=np.int64))
    arrs = [np.ascontiguousarray(a, dtype=np.int64) for a in (cn, cd, dn, dd)]
    n = len(arrs[0])
    spans = _chunks(n, max(1, len(xs)))
    parts = _run_chunks(
        lambda lo, hi: backend.product_incidence_counts(xs, b_sorted, *arrs, lo, hi),
        spans, resolve_threads(threads))
    if not parts:
        return np.zeros(0, dtype=np.int64)
    return np.concatenate(parts)
