"""Pure-Python counting kernels (fallback backend).

Same signatures and same summation scheme as the compiled backend, written
against plain lists, sets and dicts.  Array arguments are converted to
Python containers once per call, so calls are cheapest over large node
ranges.
"""

from __future__ import annotations

from bisect import bisect_left

# Above this many accumulated terms per node, partial sums are combined by
# pairwise tree reduction instead of left-to-right addition.
PAIRWISE_THRESHOLD = 1 << 10


def _tree_sum(parts: list[float]) -> float:
    buf = list(parts)
    n = len(buf)
    while n > 1:
        half = n // 2
        for k in range(half):
            buf[k] = buf[2 * k] + buf[2 * k + 1]
        if n & 1:
            buf[half] = buf[n - 1]
            n = half + 1
        else:
            n = half
    return buf[0] if buf else 0.0


def _combine(parts: list[float], n_terms: int) -> float:
    if n_terms > PAIRWISE_THRESHOLD:
        return _tree_sum(parts)
    total = 0.0
    for p in parts:
        total += p
    return total


def proposed_range(adj_ptr, adj_nbr, adj_wgt, lo, hi, out) -> None:
    """Weighted triangle/triad ratio per node over the weighted projection."""
    ptr = adj_ptr.tolist()
    nbr = adj_nbr.tolist()
    wgt = adj_wgt.tolist()
    for v in range(lo, hi):
        a0, a1 = ptr[v], ptr[v + 1]
        d = a1 - a0
        if d < 2:
            out[v] = 0.0
            continue
        num_parts = []
        den_parts = []
        for ii in range(a0, a1):
            i = nbr[ii]
            wiv = wgt[ii]
            i_lo, i_hi = ptr[i], ptr[i + 1]
            num_i = 0.0
            den_i = 0.0
            for jj in range(ii + 1, a1):
                j = nbr[jj]
                wvj = wgt[jj]
                den_i += wiv * wvj
                k = bisect_left(nbr, j, i_lo, i_hi)
                if k < i_hi and nbr[k] == j:
                    num_i += wiv * wvj * wgt[k]
            num_parts.append(num_i)
            den_parts.append(den_i)
        n_pairs = d * (d - 1) // 2
        den = _combine(den_parts, n_pairs)
        out[v] = _combine(num_parts, n_pairs) / den if den > 0.0 else 0.0


def opsahl_range(inc_ptr, inc_edges, edge_ptr, edge_nodes,
                 cov_ptr, cov_nbr, cov_cnt, lo, hi,
                 out_closed, out_total) -> None:
    """Count centered 4-paths and their closures per node (exact integers)."""
    iptr = inc_ptr.tolist()
    iedg = inc_edges.tolist()
    eptr = edge_ptr.tolist()
    ends = edge_nodes.tolist()
    esets = [set(ends[eptr[j]:eptr[j + 1]]) for j in range(len(eptr) - 1)]

    cover: dict[tuple[int, int], int] = {}
    cptr = cov_ptr.tolist()
    cnb = cov_nbr.tolist()
    ccnt = cov_cnt.tolist()
    for u in range(len(cptr) - 1):
        for k in range(cptr[u], cptr[u + 1]):
            v = cnb[k]
            if u < v:
                cover[(u, v)] = ccnt[k]

    for v in range(lo, hi):
        legs_e: list[int] = []
        legs_u: list[int] = []
        for k in range(iptr[v], iptr[v + 1]):
            j = iedg[k]
            for u in ends[eptr[j]:eptr[j + 1]]:
                if u != v:
                    legs_e.append(j)
                    legs_u.append(u)
        total = closed = 0
        n_legs = len(legs_e)
        for a in range(n_legs):
            e1 = legs_e[a]
            u = legs_u[a]
            for b in range(a + 1, n_legs):
                e2 = legs_e[b]
                w = legs_u[b]
                if e1 == e2 or u == w:
                    continue
                total += 1
                x = cover.get((u, w) if u < w else (w, u), 0)
                if x - (w in esets[e1]) - (u in esets[e2]) > 0:
                    closed += 1
        out_total[v] = total
        out_closed[v] = closed


def zhou_range(inc_ptr, inc_edges, edge_ptr, edge_nodes,
               adj_ptr, adj_nbr, lo, hi, out) -> None:
    """Average extra-overlap over unordered incident-hyperedge pairs."""
    iptr = inc_ptr.tolist()
    iedg = inc_edges.tolist()
    eptr = edge_ptr.tolist()
    ends = edge_nodes.tolist()
    n_edges = len(eptr) - 1
    emembers = [ends[eptr[j]:eptr[j + 1]] for j in range(n_edges)]
    esets = [set(m) for m in emembers]

    aptr = adj_ptr.tolist()
    anbr = adj_nbr.tolist()
    adjset = [set(anbr[aptr[u]:aptr[u + 1]]) for u in range(len(aptr) - 1)]

    for v in range(lo, hi):
        inc = iedg[iptr[v]:iptr[v + 1]]
        k = len(inc)
        if k <= 1:
            out[v] = 0.0
            continue
        parts = []
        for a in range(k):
            mem_a = emembers[inc[a]]
            set_a = esets[inc[a]]
            part = 0.0
            for b in range(a + 1, k):
                set_b = esets[inc[b]]
                d_ab = [x for x in mem_a if x not in set_b]
                d_ba = [x for x in emembers[inc[b]] if x not in set_a]
                hits = 0
                if d_ab:
                    for w in d_ba:
                        aw = adjset[w]
                        if all(u in aw for u in d_ab):
                            hits += 1
                if d_ba:
                    for u in d_ab:
                        au = adjset[u]
                        if all(x in au for x in d_ba):
                            hits += 1
                part += hits / (len(d_ab) + len(d_ba))
            parts.append(part)
        n_pairs = k * (k - 1) // 2
        out[v] = _combine(parts, n_pairs) / n_pairs


def baseline_range(adj_ptr, adj_nbr, lo, hi, out) -> None:
    """Watts-Strogatz coefficient on the clique expansion."""
    ptr = adj_ptr.tolist()
    nbr = adj_nbr.tolist()
    for v in range(lo, hi):
        row = nbr[ptr[v]:ptr[v + 1]]
        d = len(row)
        if d < 2:
            out[v] = 0.0
            continue
        members = set(row)
        twice_links = 0
        for u in row:
            for x in nbr[ptr[u]:ptr[u + 1]]:
                if x in members:
                    twice_links += 1
        out[v] = twice_links / (d * (d - 1))


def census_subset_range(pair_ptr, pair_nbr, triple_keys, n, lo, hi, counts) -> None:
    """Wedge pass of the subset-rule census over the size-2-edge graph.

    Counts classes I and II (indices 0 and 1) for triples without a size-3
    hyperedge; triples that do have one are skipped here and classified by
    the caller's triple-edge pass.
    """
    ptr = pair_ptr.tolist()
    nbr = pair_nbr.tolist()
    tset = set(triple_keys.tolist())
    for c in range(lo, hi):
        row = nbr[ptr[c]:ptr[c + 1]]
        d = len(row)
        for i in range(d):
            u = row[i]
            u_adj = None
            for j in range(i + 1, d):
                w = row[j]
                a, b, z = sorted((c, u, w))
                if (a * n + b) * n + z in tset:
                    continue
                if u_adj is None:
                    u_adj = set(nbr[ptr[u]:ptr[u + 1]])
                if w in u_adj:
                    if c < u:
                        counts[1] += 1
                else:
                    counts[0] += 1


def census_intersect_range(adj_ptr, adj_nbr, cov_ptr, cov_nbr, cov_cnt,
                           triple_keys, triple_cnt, n, lo, hi, counts) -> None:
    """Intersection-rule census over wedges of the full clique expansion."""
    ptr = adj_ptr.tolist()
    nbr = adj_nbr.tolist()
    adjset = [set(nbr[ptr[u]:ptr[u + 1]]) for u in range(len(ptr) - 1)]

    cover: dict[tuple[int, int], int] = {}
    cptr = cov_ptr.tolist()
    cnb = cov_nbr.tolist()
    ccnt = cov_cnt.tolist()
    for u in range(len(cptr) - 1):
        for k in range(cptr[u], cptr[u + 1]):
            v = cnb[k]
            if u < v:
                cover[(u, v)] = ccnt[k]

    tmap = dict(zip(triple_keys.tolist(), triple_cnt.tolist()))

    def cov(a: int, b: int) -> int:
        return cover.get((a, b) if a < b else (b, a), 0)

    for c in range(lo, hi):
        row = nbr[ptr[c]:ptr[c + 1]]
        d = len(row)
        for i in range(d):
            u = row[i]
            for j in range(i + 1, d):
                w = row[j]
                if w in adjset[u] and c > u:
                    continue
                a, b, z = sorted((c, u, w))
                t = tmap.get((a * n + b) * n + z, 0)
                p = ((cov(c, u) > t) + (cov(c, w) > t) + (cov(u, w) > t))
                if t > 0:
                    counts[2 + p] += 1
                elif p == 2:
                    counts[0] += 1
                else:
                    counts[1] += 1
