"""The four local clustering coefficient definitions behind one interface.

* ``proposed``  - weighted-projection definition: ratio of realized to
  potential triangle weight around a node.
* ``opsahl``    - bipartite 4-path closure ratio.
* ``zhou``      - average extra overlap of incident hyperedge pairs.
* ``baseline``  - Watts-Strogatz coefficient on the clique expansion.

Per-node values are pure functions of immutable indices; :func:`cc_all`
may spread nodes over threads and is byte-stable for any thread count.
"""

from __future__ import annotations

import csv
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .core import Hypergraph, check_node
from .projection import (
    PairCoverage,
    SimpleAdjacency,
    WeightedProjection,
    _build_index,
    clique_expansion,
)

DEFINITIONS = ("proposed", "opsahl", "zhou", "baseline")


@dataclass(frozen=True)
class OpsahlPathCount:
    """Centered 4-path tally: ``closed`` out of ``total`` are closed."""

    total: int
    closed: int

    @property
    def ratio(self) -> float:
        return self.closed / self.total if self.total else 0.0


@dataclass(frozen=True)
class CCRecord:
    node: int
    label: str
    c_proposed: float | None = None
    c_opsahl: float | None = None
    c_zhou: float | None = None
    c_baseline: float | None = None

    def value(self, definition: str) -> float | None:
        return getattr(self, f"c_{definition}")


class CCReport:
    """Per-node coefficient table plus all-node averages (zeros included)."""

    def __init__(self, records: list[CCRecord], definitions: tuple[str, ...]):
        self.records = records
        self.definitions = definitions
        self.averages = {
            d: float(np.mean([r.value(d) for r in records])) if records else 0.0
            for d in definitions
        }

    def column(self, definition: str) -> np.ndarray:
        return np.array([r.value(definition) for r in self.records], dtype=np.float64)

    def write_csv(self, path) -> None:
        """Per-node rows plus an ``__average__`` footer record."""
        with open(path, "w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(["node_label"] + [f"c_{d}" for d in self.definitions])
            for r in self.records:
                writer.writerow([r.label] + [repr(r.value(d)) for d in self.definitions])
            writer.writerow(["__average__"]
                            + [repr(self.averages[d]) for d in self.definitions])

    def to_json_dict(self) -> dict:
        return {
            "definitions": list(self.definitions),
            "records": [
                {"node_label": r.label,
                 **{f"c_{d}": r.value(d) for d in self.definitions}}
                for r in self.records
            ],
            "averages": {f"c_{d}": self.averages[d] for d in self.definitions},
        }

    def write_json(self, path) -> None:
        with open(path, "w") as f:
            json.dump(self.to_json_dict(), f, indent=2)
            f.write("\n")


def _validate_definitions(only) -> tuple[str, ...]:
    if only is None:
        return DEFINITIONS
    if isinstance(only, str):
        only = [s.strip() for s in only.split(",") if s.strip()]
    bad = [d for d in only if d not in DEFINITIONS]
    if bad:
        raise ValueError(f"unknown definition name(s): {', '.join(bad)}")
    if not only:
        raise ValueError("no definitions selected")
    # canonical column order regardless of selector order
    return tuple(d for d in DEFINITIONS if d in set(only))


# ---------------------------------------------------------------------------
# Single-node entry points

def cc_proposed(proj: WeightedProjection, v: int, kernels=None) -> float:
    """Weighted triangle ratio at node ``v`` over the weighted projection."""
    _check_index_node(proj.n_nodes, v)
    k = kernels or _kernels.active
    out = np.zeros(proj.n_nodes, dtype=np.float64)
    k.proposed_range(proj.ptr, proj.nbr, proj.wgt, v, v + 1, out)
    return float(out[v])


def opsahl_path_counts(h: Hypergraph, cov: PairCoverage, v: int,
                       kernels=None) -> OpsahlPathCount:
    """Total and closed centered 4-paths at node ``v``."""
    check_node(h, v)
    k = kernels or _kernels.active
    closed = np.zeros(h.n_nodes, dtype=np.int64)
    total = np.zeros(h.n_nodes, dtype=np.int64)
    k.opsahl_range(h.inc_ptr, h.inc_edges, h.edge_ptr, h.edge_nodes,
                   cov.ptr, cov.nbr, cov.cnt, v, v + 1, closed, total)
    return OpsahlPathCount(total=int(total[v]), closed=int(closed[v]))


def cc_opsahl(h: Hypergraph, cov: PairCoverage, v: int, kernels=None) -> float:
    return opsahl_path_counts(h, cov, v, kernels=kernels).ratio


def cc_zhou(h: Hypergraph, v: int, adjacency: SimpleAdjacency | None = None,
            kernels=None) -> float:
    """Average extra overlap at ``v``; builds the clique expansion if needed."""
    check_node(h, v)
    if adjacency is None:
        adjacency = clique_expansion(h)
    k = kernels or _kernels.active
    out = np.zeros(h.n_nodes, dtype=np.float64)
    k.zhou_range(h.inc_ptr, h.inc_edges, h.edge_ptr, h.edge_nodes,
                 adjacency.ptr, adjacency.nbr, v, v + 1, out)
    return float(out[v])


def cc_baseline(adj: SimpleAdjacency, v: int, kernels=None) -> float:
    """Watts-Strogatz coefficient at ``v`` on the clique expansion."""
    _check_index_node(adj.n_nodes, v)
    k = kernels or _kernels.active
    out = np.zeros(adj.n_nodes, dtype=np.float64)
    k.baseline_range(adj.ptr, adj.nbr, v, v + 1, out)
    return float(out[v])


def _check_index_node(n: int, v: int) -> None:
    if not isinstance(v, (int, np.integer)) or not 0 <= v < n:
        raise ValueError(f"invalid node id: {v!r}")


# ---------------------------------------------------------------------------
# Whole-graph evaluation

def _run_chunked(jobs, n: int, threads: int) -> None:
    """Run range jobs over [0, n); output slots are per-node, so any
    chunking yields identical results."""
    if threads <= 1:
        for job in jobs:
            job(0, n)
        return
    chunk = max(64, -(-n // (threads * 4)))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(job, lo, min(lo + chunk, n))
                   for job in jobs for lo in range(0, n, chunk)]
        for f in futures:
            f.result()


def cc_all(h: Hypergraph, only=None, threads: int = 1, kernels=None) -> CCReport:
    """Evaluate the selected definitions at every node with shared indices."""
    defs = _validate_definitions(only)
    k = kernels or _kernels.active
    n = h.n_nodes
    idx = _build_index(h, None)

    columns: dict[str, np.ndarray] = {}
    jobs = []
    if "proposed" in defs:
        out_p = np.zeros(n, dtype=np.float64)
        columns["proposed"] = out_p
        jobs.append(lambda lo, hi: k.proposed_range(
            idx.ptr, idx.nbr, idx.wgt, lo, hi, out_p))
    if "opsahl" in defs:
        closed = np.zeros(n, dtype=np.int64)
        total = np.zeros(n, dtype=np.int64)
        columns["_opsahl_closed"] = closed
        columns["_opsahl_total"] = total
        jobs.append(lambda lo, hi: k.opsahl_range(
            h.inc_ptr, h.inc_edges, h.edge_ptr, h.edge_nodes,
            idx.ptr, idx.nbr, idx.cnt, lo, hi, closed, total))
    if "zhou" in defs:
        out_z = np.zeros(n, dtype=np.float64)
        columns["zhou"] = out_z
        jobs.append(lambda lo, hi: k.zhou_range(
            h.inc_ptr, h.inc_edges, h.edge_ptr, h.edge_nodes,
            idx.ptr, idx.nbr, lo, hi, out_z))
    if "baseline" in defs:
        out_b = np.zeros(n, dtype=np.float64)
        columns["baseline"] = out_b
        jobs.append(lambda lo, hi: k.baseline_range(
            idx.ptr, idx.nbr, lo, hi, out_b))

    _run_chunked(jobs, n, threads)

    if "opsahl" in defs:
        total = columns.pop("_opsahl_total")
        closed = columns.pop("_opsahl_closed")
        columns["opsahl"] = np.where(total > 0, closed / np.maximum(total, 1), 0.0)

    records = [
        CCRecord(node=v, label=h.labels[v],
                 **{f"c_{d}": float(columns[d][v]) for d in defs})
        for v in range(n)
    ]
    return CCReport(records, defs)
