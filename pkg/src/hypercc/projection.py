"""Pairwise projections of a hypergraph.

Three views over the same covered-pair support:

* :class:`WeightedProjection` - weighted undirected graph where a covered
  pair {u, v} gets weight ``max(1 / (|e| - 1))`` over the hyperedges ``e``
  covering it (so a size-2 hyperedge forces weight 1).
* :class:`SimpleAdjacency` - the unweighted clique expansion.
* :class:`PairCoverage` - per-pair covering-edge counts, plus an
  ``O(log |e|)`` test of whether one specific hyperedge covers a pair.

All three are CSR structures over dense node ids, immutable once built.
"""

from __future__ import annotations

import csv
from typing import Sequence

import numpy as np

from .core import Hypergraph


class _PairIndex:
    """Shared CSR backbone: symmetric sorted neighbor lists per node."""

    __slots__ = ("ptr", "nbr", "wgt", "cnt", "size_cap", "edges_skipped")

    def __init__(self, ptr, nbr, wgt, cnt, size_cap, edges_skipped):
        self.ptr = ptr
        self.nbr = nbr
        self.wgt = wgt
        self.cnt = cnt
        self.size_cap = size_cap
        self.edges_skipped = edges_skipped

    @property
    def n_nodes(self) -> int:
        return len(self.ptr) - 1

    @property
    def n_pairs(self) -> int:
        return len(self.nbr) // 2

    def neighbors_of(self, v: int) -> np.ndarray:
        return self.nbr[self.ptr[v]:self.ptr[v + 1]]

    def _slot(self, u: int, v: int) -> int:
        lo, hi = self.ptr[u], self.ptr[u + 1]
        k = lo + np.searchsorted(self.nbr[lo:hi], v)
        if k < hi and self.nbr[k] == v:
            return int(k)
        return -1


def _scan_pairs(h: Hypergraph, size_cap: int | None):
    """One pass over hyperedges accumulating max-weight and cover count per pair."""
    pairs: dict[tuple[int, int], list] = {}
    skipped = 0
    for edge in h.edges:
        s = len(edge)
        if s < 2:
            continue
        if size_cap is not None and s > size_cap:
            skipped += 1
            continue
        w = 1.0 / (s - 1)
        for i in range(s):
            u = edge[i]
            for j in range(i + 1, s):
                rec = pairs.get((u, edge[j]))
                if rec is None:
                    pairs[(u, edge[j])] = [w, 1]
                else:
                    if w > rec[0]:
                        rec[0] = w
                    rec[1] += 1
    return pairs, skipped


def _build_index(h: Hypergraph, size_cap: int | None) -> _PairIndex:
    pairs, skipped = _scan_pairs(h, size_cap)
    n = h.n_nodes
    counts = np.zeros(n, dtype=np.int64)
    for (u, v) in pairs:
        counts[u] += 1
        counts[v] += 1
    ptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=ptr[1:])
    nnz = int(ptr[-1])
    nbr = np.empty(nnz, dtype=np.int32)
    wgt = np.empty(nnz, dtype=np.float64)
    cnt = np.empty(nnz, dtype=np.int32)
    fill = ptr[:-1].copy()
    # Filling in sorted (u, v) key order leaves every row sorted: for a row x,
    # all u < x arrivals precede the u == x arrivals, each group ascending.
    for (u, v) in sorted(pairs):
        w, c = pairs[(u, v)]
        k = fill[u]
        nbr[k], wgt[k], cnt[k] = v, w, c
        fill[u] = k + 1
        k = fill[v]
        nbr[k], wgt[k], cnt[k] = u, w, c
        fill[v] = k + 1
    return _PairIndex(ptr, nbr, wgt, cnt, size_cap, skipped)


class WeightedProjection(_PairIndex):
    """Weighted one-mode projection; weights in (0, 1], no self-pairs."""

    def weight(self, u: int, v: int) -> float:
        """W_uv, or 0.0 when no hyperedge covers the pair."""
        if u == v:
            return 0.0
        k = self._slot(u, v)
        return float(self.wgt[k]) if k >= 0 else 0.0

    def pairs_iter(self):
        """Yield (u, v, weight) once per unordered pair, u < v."""
        for u in range(self.n_nodes):
            lo, hi = self.ptr[u], self.ptr[u + 1]
            for k in range(lo, hi):
                v = int(self.nbr[k])
                if u < v:
                    yield u, v, float(self.wgt[k])


class SimpleAdjacency(_PairIndex):
    """Clique expansion: 0/1 symmetric adjacency, zero diagonal."""

    def adjacent(self, u: int, v: int) -> bool:
        return u != v and self._slot(u, v) >= 0

    def simple_degree(self, v: int) -> int:
        return int(self.ptr[v + 1] - self.ptr[v])


class PairCoverage(_PairIndex):
    """Covering-edge counts per pair plus single-edge membership tests."""

    __slots__ = ("edge_ptr", "edge_nodes")

    def __init__(self, ptr, nbr, wgt, cnt, size_cap, skipped, h: Hypergraph):
        super().__init__(ptr, nbr, wgt, cnt, size_cap, skipped)
        self.edge_ptr = h.edge_ptr
        self.edge_nodes = h.edge_nodes

    def cover_count(self, u: int, v: int) -> int:
        """Number of hyperedges containing both endpoints (0 if uncovered)."""
        if u == v:
            return 0
        k = self._slot(u, v)
        return int(self.cnt[k]) if k >= 0 else 0

    def covers(self, edge_index: int, u: int, v: int) -> bool:
        """Whether hyperedge ``edge_index`` contains both u and v (binary search)."""
        lo, hi = self.edge_ptr[edge_index], self.edge_ptr[edge_index + 1]
        members = self.edge_nodes[lo:hi]
        for x in (u, v):
            k = np.searchsorted(members, x)
            if k >= len(members) or members[k] != x:
                return False
        return True


def weighted_projection(h: Hypergraph, size_cap: int | None = None) -> WeightedProjection:
    """Weighted graph of the max-reciprocal pair weights.

    ``size_cap`` skips hyperedges larger than the cap; skips are counted on
    the result (``edges_skipped``), never silent.  Default: no cap.
    """
    idx = _build_index(h, size_cap)
    return WeightedProjection(idx.ptr, idx.nbr, idx.wgt, idx.cnt,
                              idx.size_cap, idx.edges_skipped)


def clique_expansion(h: Hypergraph, size_cap: int | None = None) -> SimpleAdjacency:
    """Unweighted simple graph connecting every covered pair."""
    idx = _build_index(h, size_cap)
    return SimpleAdjacency(idx.ptr, idx.nbr, idx.wgt, idx.cnt,
                           idx.size_cap, idx.edges_skipped)


def pair_coverage(h: Hypergraph, size_cap: int | None = None) -> PairCoverage:
    """Per-pair covering-edge counts for closure tests."""
    idx = _build_index(h, size_cap)
    return PairCoverage(idx.ptr, idx.nbr, idx.wgt, idx.cnt,
                        idx.size_cap, idx.edges_skipped, h)


def write_projection_csv(proj: WeightedProjection, labels: Sequence[str], path) -> None:
    """Export weight rows ``u,v,weight`` with original node labels."""
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["u", "v", "weight"])
        for u, v, w in proj.pairs_iter():
            writer.writerow([labels[u], labels[v], repr(w)])
