# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled counting kernels (preferred backend).

Mirrors ``_pure`` function by function: identical signatures, identical
iteration order and identical partial-sum combination scheme, so the two
backends agree to floating-point roundoff.
"""

from libc.stdlib cimport free, malloc

import numpy as np

cimport numpy as cnp

ctypedef cnp.int32_t i32
ctypedef cnp.int64_t i64

DEF PAIRWISE_THRESHOLD = 1024


cdef inline Py_ssize_t _search_i32(const i32[::1] arr, Py_ssize_t lo,
                                   Py_ssize_t hi, i32 x) noexcept nogil:
    """Index of x in sorted arr[lo:hi), or -1."""
    cdef Py_ssize_t mid, end = hi
    while lo < hi:
        mid = (lo + hi) >> 1
        if arr[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    if lo < end and arr[lo] == x:
        return lo
    return -1


cdef inline Py_ssize_t _search_i64(const i64[::1] arr, Py_ssize_t n,
                                   i64 x) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if arr[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    if lo < n and arr[lo] == x:
        return lo
    return -1


cdef inline double _tree_sum(double* buf, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t half, k
    while n > 1:
        half = n >> 1
        for k in range(half):
            buf[k] = buf[2 * k] + buf[2 * k + 1]
        if n & 1:
            buf[half] = buf[n - 1]
            n = half + 1
        else:
            n = half
    return buf[0] if n == 1 else 0.0


cdef inline double _combine(double* buf, Py_ssize_t n_parts,
                            i64 n_terms) noexcept nogil:
    cdef double total = 0.0
    cdef Py_ssize_t k
    if n_terms > PAIRWISE_THRESHOLD:
        return _tree_sum(buf, n_parts)
    for k in range(n_parts):
        total += buf[k]
    return total


def proposed_range(const i64[::1] adj_ptr, const i32[::1] adj_nbr,
                   const double[::1] adj_wgt, Py_ssize_t lo, Py_ssize_t hi,
                   double[::1] out):
    cdef Py_ssize_t v, ii, jj, k, a0, a1, d, max_deg = 0
    cdef Py_ssize_t i_lo, i_hi
    cdef i32 i, j
    cdef double wiv, wvj, num_i, den_i, den
    cdef i64 n_pairs
    cdef double* num_parts
    cdef double* den_parts

    for v in range(lo, hi):
        d = adj_ptr[v + 1] - adj_ptr[v]
        if d > max_deg:
            max_deg = d
    if max_deg == 0:
        for v in range(lo, hi):
            out[v] = 0.0
        return
    num_parts = <double*> malloc(max_deg * sizeof(double))
    den_parts = <double*> malloc(max_deg * sizeof(double))
    if num_parts == NULL or den_parts == NULL:
        free(num_parts)
        free(den_parts)
        raise MemoryError()
    try:
        with nogil:
            for v in range(lo, hi):
                a0 = adj_ptr[v]
                a1 = adj_ptr[v + 1]
                d = a1 - a0
                if d < 2:
                    out[v] = 0.0
                    continue
                for ii in range(a0, a1):
                    i = adj_nbr[ii]
                    wiv = adj_wgt[ii]
                    i_lo = adj_ptr[i]
                    i_hi = adj_ptr[i + 1]
                    num_i = 0.0
                    den_i = 0.0
                    for jj in range(ii + 1, a1):
                        j = adj_nbr[jj]
                        wvj = adj_wgt[jj]
                        den_i += wiv * wvj
                        k = _search_i32(adj_nbr, i_lo, i_hi, j)
                        if k >= 0:
                            num_i += wiv * wvj * adj_wgt[k]
                    num_parts[ii - a0] = num_i
                    den_parts[ii - a0] = den_i
                n_pairs = <i64> d * (d - 1) // 2
                den = _combine(den_parts, d, n_pairs)
                if den > 0.0:
                    out[v] = _combine(num_parts, d, n_pairs) / den
                else:
                    out[v] = 0.0
    finally:
        free(num_parts)
        free(den_parts)


def opsahl_range(const i64[::1] inc_ptr, const i32[::1] inc_edges,
                 const i64[::1] edge_ptr, const i32[::1] edge_nodes,
                 const i64[::1] cov_ptr, const i32[::1] cov_nbr,
                 const i32[::1] cov_cnt, Py_ssize_t lo, Py_ssize_t hi,
                 i64[::1] out_closed, i64[::1] out_total):
    cdef Py_ssize_t v, k, p, a, b, n_legs, max_legs = 0, legs
    cdef Py_ssize_t e1, e2, slot
    cdef i32 j, u, w, x
    cdef i64 total, closed
    cdef i32* legs_u
    cdef i64* legs_e

    for v in range(lo, hi):
        legs = 0
        for k in range(inc_ptr[v], inc_ptr[v + 1]):
            j = inc_edges[k]
            legs += edge_ptr[j + 1] - edge_ptr[j] - 1
        if legs > max_legs:
            max_legs = legs
    if max_legs == 0:
        for v in range(lo, hi):
            out_total[v] = 0
            out_closed[v] = 0
        return
    legs_e = <i64*> malloc(max_legs * sizeof(i64))
    legs_u = <i32*> malloc(max_legs * sizeof(i32))
    if legs_e == NULL or legs_u == NULL:
        free(legs_e)
        free(legs_u)
        raise MemoryError()
    try:
        with nogil:
            for v in range(lo, hi):
                n_legs = 0
                for k in range(inc_ptr[v], inc_ptr[v + 1]):
                    j = inc_edges[k]
                    for p in range(edge_ptr[j], edge_ptr[j + 1]):
                        u = edge_nodes[p]
                        if u != v:
                            legs_e[n_legs] = j
                            legs_u[n_legs] = u
                            n_legs += 1
                total = 0
                closed = 0
                for a in range(n_legs):
                    e1 = legs_e[a]
                    u = legs_u[a]
                    for b in range(a + 1, n_legs):
                        e2 = legs_e[b]
                        w = legs_u[b]
                        if e1 == e2 or u == w:
                            continue
                        total += 1
                        # covering edges of {u, w} other than e1, e2
                        slot = _search_i32(cov_nbr, cov_ptr[u],
                                           cov_ptr[u + 1], w)
                        x = cov_cnt[slot] if slot >= 0 else 0
                        if _search_i32(edge_nodes, edge_ptr[e1],
                                       edge_ptr[e1 + 1], w) >= 0:
                            x -= 1
                        if _search_i32(edge_nodes, edge_ptr[e2],
                                       edge_ptr[e2 + 1], u) >= 0:
                            x -= 1
                        if x > 0:
                            closed += 1
                out_total[v] = total
                out_closed[v] = closed
    finally:
        free(legs_e)
        free(legs_u)


def zhou_range(const i64[::1] inc_ptr, const i32[::1] inc_edges,
               const i64[::1] edge_ptr, const i32[::1] edge_nodes,
               const i64[::1] adj_ptr, const i32[::1] adj_nbr,
               Py_ssize_t lo, Py_ssize_t hi, double[::1] out):
    cdef Py_ssize_t v, a, b, k, p, q, deg, max_deg = 0, max_sz = 0, sz
    cdef Py_ssize_t ea, eb, na, nb, hits, i
    cdef i32 u, w
    cdef bint all_adj
    cdef double part
    cdef i64 n_pairs
    cdef Py_ssize_t n_edges = edge_ptr.shape[0] - 1
    cdef double* parts
    cdef i32* d_ab
    cdef i32* d_ba

    for v in range(lo, hi):
        deg = inc_ptr[v + 1] - inc_ptr[v]
        if deg > max_deg:
            max_deg = deg
    for a in range(n_edges):
        sz = edge_ptr[a + 1] - edge_ptr[a]
        if sz > max_sz:
            max_sz = sz
    if max_deg == 0 or max_sz == 0:
        for v in range(lo, hi):
            out[v] = 0.0
        return
    parts = <double*> malloc(max_deg * sizeof(double))
    d_ab = <i32*> malloc(max_sz * sizeof(i32))
    d_ba = <i32*> malloc(max_sz * sizeof(i32))
    if parts == NULL or d_ab == NULL or d_ba == NULL:
        free(parts)
        free(d_ab)
        free(d_ba)
        raise MemoryError()
    try:
        with nogil:
            for v in range(lo, hi):
                deg = inc_ptr[v + 1] - inc_ptr[v]
                if deg <= 1:
                    out[v] = 0.0
                    continue
                for a in range(deg):
                    ea = inc_edges[inc_ptr[v] + a]
                    part = 0.0
                    for b in range(a + 1, deg):
                        eb = inc_edges[inc_ptr[v] + b]
                        # set differences of the two sorted member lists
                        na = 0
                        for p in range(edge_ptr[ea], edge_ptr[ea + 1]):
                            u = edge_nodes[p]
                            if _search_i32(edge_nodes, edge_ptr[eb],
                                           edge_ptr[eb + 1], u) < 0:
                                d_ab[na] = u
                                na += 1
                        nb = 0
                        for p in range(edge_ptr[eb], edge_ptr[eb + 1]):
                            u = edge_nodes[p]
                            if _search_i32(edge_nodes, edge_ptr[ea],
                                           edge_ptr[ea + 1], u) < 0:
                                d_ba[nb] = u
                                nb += 1
                        hits = 0
                        if na > 0:
                            for q in range(nb):
                                w = d_ba[q]
                                all_adj = True
                                for i in range(na):
                                    if _search_i32(adj_nbr, adj_ptr[w],
                                                   adj_ptr[w + 1],
                                                   d_ab[i]) < 0:
                                        all_adj = False
                                        break
                                if all_adj:
                                    hits += 1
                        if nb > 0:
                            for q in range(na):
                                u = d_ab[q]
                                all_adj = True
                                for i in range(nb):
                                    if _search_i32(adj_nbr, adj_ptr[u],
                                                   adj_ptr[u + 1],
                                                   d_ba[i]) < 0:
                                        all_adj = False
                                        break
                                if all_adj:
                                    hits += 1
                        part += (<double> hits) / (na + nb)
                    parts[a] = part
                n_pairs = <i64> deg * (deg - 1) // 2
                out[v] = _combine(parts, deg, n_pairs) / n_pairs
    finally:
        free(parts)
        free(d_ab)
        free(d_ba)


def baseline_range(const i64[::1] adj_ptr, const i32[::1] adj_nbr,
                   Py_ssize_t lo, Py_ssize_t hi, double[::1] out):
    cdef Py_ssize_t v, k, p, d
    cdef i32 u
    cdef i64 twice_links
    with nogil:
        for v in range(lo, hi):
            d = adj_ptr[v + 1] - adj_ptr[v]
            if d < 2:
                out[v] = 0.0
                continue
            twice_links = 0
            for k in range(adj_ptr[v], adj_ptr[v + 1]):
                u = adj_nbr[k]
                for p in range(adj_ptr[u], adj_ptr[u + 1]):
                    if _search_i32(adj_nbr, adj_ptr[v], adj_ptr[v + 1],
                                   adj_nbr[p]) >= 0:
                        twice_links += 1
            out[v] = (<double> twice_links) / (<i64> d * (d - 1))


def census_subset_range(const i64[::1] pair_ptr, const i32[::1] pair_nbr,
                        const i64[::1] triple_keys, i64 n,
                        Py_ssize_t lo, Py_ssize_t hi, i64[::1] counts):
    cdef Py_ssize_t c, i, j, d
    cdef i32 u, w
    cdef i64 a, b, z, key
    cdef Py_ssize_t n_keys = triple_keys.shape[0]
    with nogil:
        for c in range(lo, hi):
            d = pair_ptr[c + 1] - pair_ptr[c]
            for i in range(d):
                u = pair_nbr[pair_ptr[c] + i]
                for j in range(i + 1, d):
                    w = pair_nbr[pair_ptr[c] + j]
                    a = c
                    b = u
                    z = w
                    if a > b:
                        a, b = b, a
                    if b > z:
                        b, z = z, b
                    if a > b:
                        a, b = b, a
                    key = (a * n + b) * n + z
                    if _search_i64(triple_keys, n_keys, key) >= 0:
                        continue
                    if _search_i32(pair_nbr, pair_ptr[u],
                                   pair_ptr[u + 1], w) >= 0:
                        if c < u:
                            counts[1] += 1
                    else:
                        counts[0] += 1


cdef inline i32 _cov_lookup(const i64[::1] cov_ptr, const i32[::1] cov_nbr,
                            const i32[::1] cov_cnt, i32 a,
                            i32 b) noexcept nogil:
    cdef Py_ssize_t slot = _search_i32(cov_nbr, cov_ptr[a], cov_ptr[a + 1], b)
    return cov_cnt[slot] if slot >= 0 else 0


def census_intersect_range(const i64[::1] adj_ptr, const i32[::1] adj_nbr,
                           const i64[::1] cov_ptr, const i32[::1] cov_nbr,
                           const i32[::1] cov_cnt,
                           const i64[::1] triple_keys,
                           const i64[::1] triple_cnt, i64 n,
                           Py_ssize_t lo, Py_ssize_t hi, i64[::1] counts):
    cdef Py_ssize_t c, i, j, d, slot
    cdef i32 u, w
    cdef i64 a, b, z, key, t
    cdef int p
    cdef Py_ssize_t n_keys = triple_keys.shape[0]
    with nogil:
        for c in range(lo, hi):
            d = adj_ptr[c + 1] - adj_ptr[c]
            for i in range(d):
                u = adj_nbr[adj_ptr[c] + i]
                for j in range(i + 1, d):
                    w = adj_nbr[adj_ptr[c] + j]
                    if (_search_i32(adj_nbr, adj_ptr[u], adj_ptr[u + 1], w)
                            >= 0 and c > u):
                        continue
                    a = c
                    b = u
                    z = w
                    if a > b:
                        a, b = b, a
                    if b > z:
                        b, z = z, b
                    if a > b:
                        a, b = b, a
                    key = (a * n + b) * n + z
                    slot = _search_i64(triple_keys, n_keys, key)
                    t = triple_cnt[slot] if slot >= 0 else 0
                    p = 0
                    if _cov_lookup(cov_ptr, cov_nbr, cov_cnt, <i32> c, u) > t:
                        p += 1
                    if _cov_lookup(cov_ptr, cov_nbr, cov_cnt, <i32> c, w) > t:
                        p += 1
                    if _cov_lookup(cov_ptr, cov_nbr, cov_cnt, u, w) > t:
                        p += 1
                    if t > 0:
                        counts[2 + p] += 1
                    elif p == 2:
                        counts[0] += 1
                    else:
                        counts[1] += 1
