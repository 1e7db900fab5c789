"""Multiplicity-table assembly shared by both kernel backends.

A "table" is a pair (key_columns, counts): key_columns is a tuple of equal
length int64 arrays holding the distinct keys, counts the multiplicity of
each key.  Keys may be 1 column (sums, products) or 4 columns (canonical
line quotients: slope num/den, intercept num/den).
"""

from __future__ import annotations

import numpy as np


def unique_rows(cols):
    """Collapse parallel key columns to (distinct_cols, counts) via lexsort."""
    n = cols[0].shape[0]
    if n == 0:
        return tuple(c[:0] for c in cols), np.zeros(0, dtype=np.int64)
    order = np.lexsort(cols[::-1])
    cols = [c[order] for c in cols]
    change = np.zeros(n, dtype=bool)
    change[0] = True
    for c in cols:
        change[1:] |= c[1:] != c[:-1]
    starts = np.flatnonzero(change)
    counts = np.diff(np.append(starts, n)).astype(np.int64)
    return tuple(c[starts] for c in cols), counts


def merge_into(table: dict, cols, counts) -> None:
    """Accumulate a (cols, counts) chunk table into a Python dict.

    Merging is additive and therefore independent of chunk boundaries and
    of the order chunks arrive in.
    """
    count_list = counts.tolist()
    if len(cols) == 1:
        keys = cols[0].tolist()
    else:
        keys = zip(*(c.tolist() for c in cols))
    for key, cnt in zip(keys, count_list):
        if key in table:
            table[key] += cnt
        else:
            table[key] = cnt
