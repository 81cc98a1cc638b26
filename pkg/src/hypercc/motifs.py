"""Order-3 motif classification, census and the canonical rooted fixtures.

Connected 3-node patterns over the edge types {pair, triple} fall into six
classes: I wedge, II triangle (pairs only), III bare triple edge, then
IV/V/VI a triple edge plus one, two or three pair edges.  By default a
hyperedge shapes a triple T only when fully contained in it (``subset``
rule); the ``intersect`` rule, which also projects larger hyperedges onto
T, is available for exploration.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from enum import IntEnum
from itertools import combinations

import numpy as np

from . import _kernels
from .coefficients import cc_all
from .core import Hypergraph, build, check_node
from .projection import _build_index

_MAX_CENSUS_NODES = 1 << 21  # triple keys are packed into an int64

INDUCTION_RULES = ("subset", "intersect")


class MotifClass(IntEnum):
    I = 1
    II = 2
    III = 3
    IV = 4
    V = 5
    VI = 6


@dataclass(frozen=True)
class RootedPattern:
    """A motif class plus the evaluated node's position within it."""

    name: str
    motif: MotifClass
    root_position: str


@dataclass(frozen=True)
class MotifCensus:
    counts: dict[MotifClass, int]
    rule: str

    @property
    def triples_examined(self) -> int:
        return sum(self.counts.values())

    def as_dict(self) -> dict:
        return {m.name: self.counts[m] for m in MotifClass}

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(["motif_class", "count"])
            for m in MotifClass:
                writer.writerow([m.name, self.counts[m]])

    def write_json(self, path) -> None:
        with open(path, "w") as f:
            json.dump({"rule": self.rule, "counts": self.as_dict(),
                       "triples_examined": self.triples_examined}, f, indent=2)
            f.write("\n")


def classify_triple(h: Hypergraph, triple, rule: str = "subset") -> MotifClass | None:
    """Motif class of a 3-node set, or None when its pattern is disconnected.

    Only hyperedges incident to the triple are inspected, so this stays fast
    on large hypergraphs.
    """
    nodes = sorted(set(triple))
    if len(nodes) != 3:
        raise ValueError("need three distinct nodes")
    for v in nodes:
        check_node(h, v)
    if rule not in INDUCTION_RULES:
        raise ValueError(f"unknown induction rule: {rule!r}")
    tset = frozenset(nodes)
    candidates: set[int] = set()
    for v in nodes:
        candidates.update(h.inc_edges[h.inc_ptr[v]:h.inc_ptr[v + 1]].tolist())
    has_triple = False
    pair_edges: set[frozenset] = set()
    for j in sorted(candidates):
        members = set(h.edges[j])
        cut = members & tset if rule == "intersect" else (
            members if members <= tset else None)
        if cut is None:
            continue
        if len(cut) == 3:
            has_triple = True
        elif len(cut) == 2:
            pair_edges.add(frozenset(cut))
    n_pairs = len(pair_edges)
    if has_triple:
        return MotifClass(3 + n_pairs)
    if n_pairs == 2:
        return MotifClass.I
    if n_pairs == 3:
        return MotifClass.II
    return None


def _encode_triples(triples, n: int) -> np.ndarray:
    keys = [(a * n + b) * n + c for (a, b, c) in triples]
    return np.array(sorted(keys), dtype=np.int64)


def census_order3(h: Hypergraph, rule: str = "subset", threads: int = 1,
                  kernels=None) -> MotifCensus:
    """Count every connected 3-node pattern, visiting only candidate triples.

    Candidates come from size-3 hyperedges and from wedges of the relevant
    pair graph, never from all C(N,3) subsets.
    """
    if rule not in INDUCTION_RULES:
        raise ValueError(f"unknown induction rule: {rule!r}")
    n = h.n_nodes
    if n >= _MAX_CENSUS_NODES:
        raise ValueError("census supports fewer than 2**21 nodes")
    k = kernels or _kernels.active
    counts = np.zeros(6, dtype=np.int64)

    if rule == "subset":
        pair_set = {e for e in h.edges if len(e) == 2}
        triple_edges = [e for e in h.edges if len(e) == 3]
        # triples holding a size-3 hyperedge, classified directly
        for (a, b, c) in triple_edges:
            p = (((a, b) in pair_set) + ((a, c) in pair_set)
                 + ((b, c) in pair_set))
            counts[2 + p] += 1
        # remaining triples connect through >= 2 pair edges: wedge scan
        pair_idx = _pair_graph(pair_set, n)
        tkeys = _encode_triples(triple_edges, n)
        jobs = [lambda lo, hi, buf=counts: k.census_subset_range(
            pair_idx.ptr, pair_idx.nbr, tkeys, n, lo, hi, buf)]
        _run_census(jobs, n, threads, k, counts)
    else:
        idx = _build_index(h, None)
        tmap: dict[int, int] = {}
        for e in h.edges:
            if len(e) >= 3:
                for (a, b, c) in combinations(e, 3):
                    key = (a * n + b) * n + c
                    tmap[key] = tmap.get(key, 0) + 1
        items = sorted(tmap.items())
        tkeys = np.array([key for key, _ in items], dtype=np.int64)
        tcnt = np.array([cnt for _, cnt in items], dtype=np.int64)
        jobs = [lambda lo, hi, buf=counts: k.census_intersect_range(
            idx.ptr, idx.nbr, idx.ptr, idx.nbr, idx.cnt,
            tkeys, tcnt, n, lo, hi, buf)]
        _run_census(jobs, n, threads, k, counts)

    return MotifCensus(
        counts={m: int(counts[m.value - 1]) for m in MotifClass}, rule=rule)


def _run_census(jobs, n: int, threads: int, k, counts: np.ndarray) -> None:
    """Run census range jobs; kernel writes are additive, so chunks with
    private buffers merge into ``counts`` by summation."""
    if threads <= 1:
        for job in jobs:
            job(0, n)
        return
    from concurrent.futures import ThreadPoolExecutor

    chunk = max(64, -(-n // (threads * 4)))
    buffers = []
    tasks = []
    for job in jobs:
        for lo in range(0, n, chunk):
            buf = np.zeros(6, dtype=np.int64)
            buffers.append(buf)
            tasks.append((job, lo, min(lo + chunk, n), buf))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(job, lo, hi, buf=buf)
                   for (job, lo, hi, buf) in tasks]
        for f in futures:
            f.result()
    for buf in buffers:
        counts += buf


class _PairGraph:
    __slots__ = ("ptr", "nbr")

    def __init__(self, ptr, nbr):
        self.ptr = ptr
        self.nbr = nbr


def _pair_graph(pair_set, n: int) -> _PairGraph:
    """CSR adjacency over size-2 hyperedges only."""
    deg = np.zeros(n, dtype=np.int64)
    for (u, v) in pair_set:
        deg[u] += 1
        deg[v] += 1
    ptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(deg, out=ptr[1:])
    nbr = np.empty(int(ptr[-1]), dtype=np.int32)
    fill = ptr[:-1].copy()
    for (u, v) in sorted(pair_set):
        nbr[fill[u]] = v
        fill[u] += 1
        nbr[fill[v]] = u
        fill[v] += 1
    return _PairGraph(ptr, nbr)


# ---------------------------------------------------------------------------
# Canonical rooted fixtures and the reference value matrix

FIXTURE_NAMES = ("I", "II", "III", "IV-a", "IV-b", "V", "VI")


def canonical_fixtures() -> list[tuple[RootedPattern, Hypergraph, int]]:
    """The seven rooted 3-node fixtures on labels {a, b, c}."""
    specs = [
        ("I", MotifClass.I, "center of the wedge", [{"a", "b"}, {"a", "c"}], "a"),
        ("II", MotifClass.II, "any corner of the pair triangle",
         [{"a", "b"}, {"a", "c"}, {"b", "c"}], "a"),
        ("III", MotifClass.III, "any member of the triple edge",
         [{"a", "b", "c"}], "a"),
        ("IV-a", MotifClass.IV, "inside the pair edge",
         [{"a", "b", "c"}, {"a", "b"}], "a"),
        ("IV-b", MotifClass.IV, "outside the pair edge",
         [{"a", "b", "c"}, {"a", "b"}], "c"),
        ("V", MotifClass.V, "incident to both pair edges",
         [{"a", "b", "c"}, {"a", "b"}, {"a", "c"}], "a"),
        ("VI", MotifClass.VI, "any corner (fully symmetric)",
         [{"a", "b", "c"}, {"a", "b"}, {"a", "c"}, {"b", "c"}], "a"),
    ]
    out = []
    for name, motif, position, edges, root in specs:
        h = build(edges)
        out.append((RootedPattern(name, motif, position), h, h.id_of(root)))
    return out


@dataclass(frozen=True)
class Table1:
    """4 x 7 reference matrix: definition rows by rooted-fixture columns."""

    rows: tuple[str, ...]
    cols: tuple[str, ...]
    values: tuple[tuple[float, ...], ...]

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(["definition"] + list(self.cols))
            for name, row in zip(self.rows, self.values):
                writer.writerow([name] + [repr(x) for x in row])


def table1_matrix(kernels=None) -> Table1:
    """Evaluate all four definitions at the root of each fixture."""
    rows = ("opsahl", "zhou", "baseline", "proposed")
    per_def: dict[str, list[float]] = {d: [] for d in rows}
    for _pattern, h, root in canonical_fixtures():
        report = cc_all(h, kernels=kernels)
        for d in rows:
            per_def[d].append(report.records[root].value(d))
    return Table1(rows=rows, cols=FIXTURE_NAMES,
                  values=tuple(tuple(per_def[d]) for d in rows))
