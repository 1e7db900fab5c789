"""Pure numpy kernel backend.

Used when the compiled extension is unavailable (or forced via INCLAB_PURE=1).
All arithmetic is int64; callers are responsible for the overflow guards in
inclab.kernels before handing work to any backend.
"""

from __future__ import annotations

import numpy as np

from ._tables import unique_rows

NAME = "python"


def cross_sum_table(u, v, lo, hi):
    """Table of u[i] + v[j] over i in [lo, hi), all j."""
    s = (u[lo:hi, None] + v[None, :]).ravel()
    uniq, counts = np.unique(s, return_counts=True)
    return (uniq,), counts.astype(np.int64)


def cross_prod_table(u, v, lo, hi):
    """Table of u[i] * v[j] over i in [lo, hi), all j."""
    p = (u[lo:hi, None] * v[None, :]).ravel()
    uniq, counts = np.unique(p, return_counts=True)
    return (uniq,), counts.astype(np.int64)


def line_quotient_table(cn, cd, dn, dd, lo, hi):
    """Table of canonical group quotients inverse(line_i) o line_j.

    Lines arrive as reduced slope (cn/cd) and intercept (dn/dd) components.
    The quotient of pair (i, j) is slope c_j/c_i and intercept (d_j - d_i)/c_i;
    each component is reduced to canonical form (positive denominator,
    gcd 1, zero as 0/1) so equal group elements collide exactly.
    """
    sn = cn[None, :] * cd[lo:hi, None]
    sd = cn[lo:hi, None] * cd[None, :]
    inum = (dn[None, :] * dd[lo:hi, None] - dn[lo:hi, None] * dd[None, :]) * cd[lo:hi, None]
    iden = dd[lo:hi, None] * dd[None, :] * cn[lo:hi, None]

    g = np.gcd(sn, sd)
    sn //= g
    sd //= g
    neg = sd < 0
    np.negative(sn, where=neg, out=sn)
    np.negative(sd, where=neg, out=sd)

    g = np.gcd(inum, iden)
    inum //= g
    iden //= g
    neg = iden < 0
    np.negative(inum, where=neg, out=inum)
    np.negative(iden, where=neg, out=iden)

    cols = [sn.ravel(), sd.ravel(), inum.ravel(), iden.ravel()]
    return unique_rows(cols)


def product_incidence_counts(xs, b_sorted, cn, cd, dn, dd, lo, hi):
    """Per-line counts of x in xs with c*x + d in b_sorted, lines [lo, hi).

    Denominators cd, dd are positive, so the floor divmod below is the exact
    rational test: c*x + d = (cn*dd*x + dn*cd) / (cd*dd).
    """
    if b_sorted.shape[0] == 0 or xs.shape[0] == 0:
        return np.zeros(hi - lo, dtype=np.int64)
    num = cn[lo:hi, None] * dd[lo:hi, None] * xs[None, :] + (dn * cd)[lo:hi, None]
    den = (cd * dd)[lo:hi, None]
    q, r = np.divmod(num, den)
    hit = r == 0
    vals = q[hit]
    pos = np.searchsorted(b_sorted, vals)
    pos[pos == b_sorted.shape[0]] = 0
    found = np.zeros_like(hit)
    found[hit] = b_sorted[pos] == vals
    return found.sum(axis=1, dtype=np.int64)
