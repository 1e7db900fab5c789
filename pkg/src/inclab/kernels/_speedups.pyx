# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend: tight int64 loops for the pair-enumeration cores.

Semantics must match inclab.kernels._pure exactly; tests compare the two
backends on identical inputs.  cdivision is safe throughout because every
division below is exact (gcd-reduced or divisibility-checked), where C
truncation and floor agree.
"""

import numpy as np

from ._tables import unique_rows

NAME = "c"


cdef inline long long _gcd(long long a, long long b) noexcept nogil:
    cdef long long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline void _canon(long long* num, long long* den) noexcept nogil:
    cdef long long g = _gcd(num[0], den[0])
    num[0] = num[0] // g
    den[0] = den[0] // g
    if den[0] < 0:
        num[0] = -num[0]
        den[0] = -den[0]


def cross_sum_table(long long[::1] u, long long[::1] v, Py_ssize_t lo, Py_ssize_t hi):
    """Table of u[i] + v[j] over i in [lo, hi), all j."""
    cdef Py_ssize_t nv = v.shape[0], i, j, k = 0
    out = np.empty((hi - lo) * nv, dtype=np.int64)
    cdef long long[::1] o = out
    with nogil:
        for i in range(lo, hi):
            for j in range(nv):
                o[k] = u[i] + v[j]
                k += 1
    uniq, counts = np.unique(out, return_counts=True)
    return (uniq,), counts.astype(np.int64)


def cross_prod_table(long long[::1] u, long long[::1] v, Py_ssize_t lo, Py_ssize_t hi):
    """Table of u[i] * v[j] over i in [lo, hi), all j."""
    cdef Py_ssize_t nv = v.shape[0], i, j, k = 0
    out = np.empty((hi - lo) * nv, dtype=np.int64)
    cdef long long[::1] o = out
    with nogil:
        for i in range(lo, hi):
            for j in range(nv):
                o[k] = u[i] * v[j]
                k += 1
    uniq, counts = np.unique(out, return_counts=True)
    return (uniq,), counts.astype(np.int64)


cdef inline unsigned long long _mix4(long long a, long long b,
                                     long long c, long long d) noexcept nogil:
    cdef unsigned long long h = 0x9e3779b97f4a7c15ULL
    cdef unsigned long long v
    v = <unsigned long long>a; h = (h ^ v) * 0xff51afd7ed558ccdULL
    v = <unsigned long long>b; h = (h ^ v) * 0xc4ceb9fe1a85ec53ULL
    v = <unsigned long long>c; h = (h ^ v) * 0xff51afd7ed558ccdULL
    v = <unsigned long long>d; h = (h ^ v) * 0xc4ceb9fe1a85ec53ULL
    h ^= h >> 33
    return h


cdef inline Py_ssize_t _insert(long long[::1] k1, long long[::1] k2,
                               long long[::1] k3, long long[::1] k4,
                               long long[::1] cnt, unsigned long long mask,
                               long long a, long long b, long long c,
                               long long d, long long add) noexcept nogil:
    """Add `add` to key (a,b,c,d); returns 1 when a new slot was taken."""
    cdef unsigned long long idx = _mix4(a, b, c, d) & mask
    while True:
        if cnt[idx] == 0:
            k1[idx] = a; k2[idx] = b; k3[idx] = c; k4[idx] = d
            cnt[idx] = add
            return 1
        if k1[idx] == a and k2[idx] == b and k3[idx] == c and k4[idx] == d:
            cnt[idx] += add
            return 0
        idx = (idx + 1) & mask


def line_quotient_table(long long[::1] cn, long long[::1] cd,
                        long long[::1] dn, long long[::1] dd,
                        Py_ssize_t lo, Py_ssize_t hi):
    """Table of canonical group quotients inverse(line_i) o line_j.

    Accumulates straight into an open-addressing hash table (linear probing,
    load kept under 1/2) instead of materializing all pairs; the compacted
    table is lexsorted so output matches the numpy backend bit for bit.
    """
    cdef Py_ssize_t n = cn.shape[0], i, j, used = 0, slot
    cdef Py_ssize_t cap = 1 << 12
    cdef long long sn, sd, inum, iden
    while cap < 4 * n:
        cap <<= 1
    t1 = np.empty(cap, dtype=np.int64)
    t2 = np.empty(cap, dtype=np.int64)
    t3 = np.empty(cap, dtype=np.int64)
    t4 = np.empty(cap, dtype=np.int64)
    tc = np.zeros(cap, dtype=np.int64)
    cdef long long[::1] k1 = t1, k2 = t2, k3 = t3, k4 = t4, cnt = tc
    cdef long long[::1] n1, n2, n3, n4, nc
    cdef unsigned long long mask = cap - 1

    for i in range(lo, hi):
        if 2 * (used + n) > cap:
            # grow before the row so the nogil loop never rehashes
            while 2 * (used + n) > cap:
                cap <<= 1
            u1 = np.empty(cap, dtype=np.int64)
            u2 = np.empty(cap, dtype=np.int64)
            u3 = np.empty(cap, dtype=np.int64)
            u4 = np.empty(cap, dtype=np.int64)
            uc = np.zeros(cap, dtype=np.int64)
            n1 = u1; n2 = u2; n3 = u3; n4 = u4; nc = uc
            mask = cap - 1
            with nogil:
                for slot in range(cnt.shape[0]):
                    if cnt[slot] != 0:
                        _insert(n1, n2, n3, n4, nc, mask, k1[slot], k2[slot],
                                k3[slot], k4[slot], cnt[slot])
            t1, t2, t3, t4, tc = u1, u2, u3, u4, uc
            k1 = n1; k2 = n2; k3 = n3; k4 = n4; cnt = nc
        with nogil:
            for j in range(n):
                sn = cn[j] * cd[i]
                sd = cn[i] * cd[j]
                _canon(&sn, &sd)
                inum = (dn[j] * dd[i] - dn[i] * dd[j]) * cd[i]
                iden = dd[i] * dd[j] * cn[i]
                _canon(&inum, &iden)
                used += _insert(k1, k2, k3, k4, cnt, mask, sn, sd, inum, iden, 1)

    full = np.asarray(tc) != 0
    cols = [np.asarray(t1)[full], np.asarray(t2)[full],
            np.asarray(t3)[full], np.asarray(t4)[full]]
    counts = np.asarray(tc)[full]
    order = np.lexsort(cols[::-1])
    return tuple(c[order] for c in cols), counts[order]


def product_incidence_counts(long long[::1] xs, long long[::1] b_sorted,
                             long long[::1] cn, long long[::1] cd,
                             long long[::1] dn, long long[::1] dd,
                             Py_ssize_t lo, Py_ssize_t hi):
    """Per-line counts of x in xs with c*x + d in b_sorted, lines [lo, hi)."""
    cdef Py_ssize_t nx = xs.shape[0], nb = b_sorted.shape[0]
    cdef Py_ssize_t i, j, a, b, mid
    cdef long long coef, base, den, num, q, cnt
    out = np.zeros(hi - lo, dtype=np.int64)
    cdef long long[::1] o = out
    if nx == 0 or nb == 0:
        return out
    with nogil:
        for i in range(lo, hi):
            coef = cn[i] * dd[i]
            base = dn[i] * cd[i]
            den = cd[i] * dd[i]
            cnt = 0
            for j in range(nx):
                num = coef * xs[j] + base
                if num % den == 0:
                    q = num // den
                    a = 0
                    b = nb
                    while a < b:
                        mid = (a + b) >> 1
                        if b_sorted[mid] < q:
                            a = mid + 1
                        else:
                            b = mid
                    if a < nb and b_sorted[a] == q:
                        cnt += 1
            o[i - lo] = cnt
    return out
