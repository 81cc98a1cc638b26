"""Immutable simple-hypergraph model with incidence indexing.

A hypergraph is a node set plus a family of hyperedges (arbitrary-size node
subsets) with no two hyperedges sharing an identical member set.  Nodes carry
opaque string labels and are addressed internally by dense integer ids so the
counting kernels can work on flat arrays.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np


def _label_key(label: str) -> tuple[int, int, str]:
    """Sort key placing all-digit labels in numeric order ahead of the rest.

    The label itself breaks numeric ties ("07" vs "7") so distinct labels
    never compare equal and ordering stays independent of hash seeds.
    """
    if label.isdigit():
        return (0, int(label), label)
    return (1, 0, label)


class Hypergraph:
    """Dense-id hypergraph, immutable after construction.

    Instances should be created through :func:`build`, which performs label
    densification, in-edge label dedup and duplicate-hyperedge removal.  All
    read operations are safe for concurrent use.

    Attributes
    ----------
    labels : list[str]
        Original node label for each dense id; ids run 0..N-1 in label order.
    edges : list[tuple[int, ...]]
        Hyperedges as strictly increasing member-id tuples, in input order
        of first occurrence.
    duplicates_collapsed : int
        Number of input edges dropped because an identical member set had
        already been seen.
    """

    __slots__ = (
        "labels", "edges", "duplicates_collapsed", "_label_index",
        "edge_ptr", "edge_nodes", "inc_ptr", "inc_edges",
    )

    def __init__(self, labels: Sequence[str], edges: Sequence[tuple[int, ...]],
                 duplicates_collapsed: int = 0):
        self.labels = list(labels)
        self.edges = list(edges)
        self.duplicates_collapsed = duplicates_collapsed
        self._label_index = {lab: i for i, lab in enumerate(self.labels)}

        n, m = len(self.labels), len(self.edges)
        sizes = np.fromiter((len(e) for e in self.edges), dtype=np.int64, count=m)
        self.edge_ptr = np.zeros(m + 1, dtype=np.int64)
        np.cumsum(sizes, out=self.edge_ptr[1:])
        self.edge_nodes = np.fromiter(
            (v for e in self.edges for v in e), dtype=np.int32,
            count=int(self.edge_ptr[-1]))

        # Incidence = CSR transpose of the membership relation.  Stable sort
        # keeps edge indices ascending within each node's slice.
        owner = np.repeat(np.arange(m, dtype=np.int32), sizes)
        order = np.argsort(self.edge_nodes, kind="stable")
        self.inc_edges = owner[order]
        counts = np.bincount(self.edge_nodes, minlength=n)
        self.inc_ptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=self.inc_ptr[1:])

    @property
    def n_nodes(self) -> int:
        return len(self.labels)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def bipartite_edges(self) -> int:
        """Total membership count, i.e. the edge count of the bipartite form."""
        return int(self.edge_ptr[-1])

    def id_of(self, label: str) -> int:
        return self._label_index[label]

    def label_of(self, v: int) -> str:
        return self.labels[v]

    def incidence(self, v: int) -> list[int]:
        """Indices of the hyperedges containing node ``v``, ascending."""
        check_node(self, v)
        return self.inc_edges[self.inc_ptr[v]:self.inc_ptr[v + 1]].tolist()

    def degree(self, v: int) -> int:
        """Number of hyperedges containing ``v``."""
        check_node(self, v)
        return int(self.inc_ptr[v + 1] - self.inc_ptr[v])

    def edge_sizes(self) -> np.ndarray:
        return np.diff(self.edge_ptr)

    def __repr__(self) -> str:
        return (f"Hypergraph(n_nodes={self.n_nodes}, n_edges={self.n_edges}, "
                f"bipartite_edges={self.bipartite_edges})")


@dataclass(frozen=True)
class SummaryStats:
    """Exact integer counts with averages kept as exact integer ratios."""

    n_nodes: int
    n_edges: int
    bipartite_edges: int
    avg_degree: Fraction
    avg_edge_size: Fraction

    def as_dict(self) -> dict:
        return {
            "n_nodes": self.n_nodes,
            "n_edges": self.n_edges,
            "bipartite_edges": self.bipartite_edges,
            "avg_degree": float(self.avg_degree),
            "avg_edge_size": float(self.avg_edge_size),
        }


def check_node(h: Hypergraph, v: int) -> None:
    if not isinstance(v, (int, np.integer)) or not 0 <= v < h.n_nodes:
        raise ValueError(f"invalid node id: {v!r}")


def build(raw_edges: Iterable[Iterable[str]]) -> Hypergraph:
    """Construct a hypergraph from an iterable of node-label collections.

    Labels are deduplicated within each edge, node ids are assigned densely
    in label-sorted order, and hyperedges with identical member sets are
    collapsed to the first occurrence (the number removed is recorded on the
    result as ``duplicates_collapsed``).

    Raises
    ------
    ValueError
        If the input contains no edges, or an edge has no members.
    """
    label_sets = []
    for raw in raw_edges:
        members = {str(lab) for lab in raw}
        if not members:
            raise ValueError("hyperedge with zero members")
        label_sets.append(members)
    if not label_sets:
        raise ValueError("empty hypergraph")

    labels = sorted({lab for e in label_sets for lab in e}, key=_label_key)
    index = {lab: i for i, lab in enumerate(labels)}

    edges: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    dups = 0
    for members in label_sets:
        edge = tuple(sorted(index[lab] for lab in members))
        if edge in seen:
            dups += 1
            continue
        seen.add(edge)
        edges.append(edge)
    return Hypergraph(labels, edges, duplicates_collapsed=dups)


def neighbors(h: Hypergraph, v: int) -> set[int]:
    """All nodes sharing at least one hyperedge with ``v``, excluding ``v``."""
    check_node(h, v)
    out: set[int] = set()
    for j in h.inc_edges[h.inc_ptr[v]:h.inc_ptr[v + 1]]:
        out.update(h.edges[j])
    out.discard(v)
    return out


def connected_components(h: Hypergraph) -> list[list[int]]:
    """Node components under shared-hyperedge adjacency, BFS order within."""
    seen = bytearray(h.n_nodes)
    edge_seen = bytearray(h.n_edges)
    components: list[list[int]] = []
    for start in range(h.n_nodes):
        if seen[start]:
            continue
        seen[start] = 1
        comp = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for j in h.inc_edges[h.inc_ptr[v]:h.inc_ptr[v + 1]]:
                if edge_seen[j]:
                    continue
                edge_seen[j] = 1
                for u in h.edges[j]:
                    if not seen[u]:
                        seen[u] = 1
                        comp.append(u)
                        queue.append(u)
        components.append(comp)
    return components


def largest_connected_component(h: Hypergraph) -> Hypergraph:
    """Induced sub-hypergraph on the largest component, ids re-densified.

    Every hyperedge lies entirely inside one component, so restriction keeps
    exactly the edges whose members are retained.  Ties between equal-sized
    components go to the one containing the smallest original label.
    """
    comps = connected_components(h)
    comps.sort(key=lambda c: (-len(c), min(_label_key(h.labels[v]) for v in c)))
    keep = set(comps[0])
    raw = [[h.labels[v] for v in e] for e in h.edges if e[0] in keep]
    return build(raw)


def summary_stats(h: Hypergraph) -> SummaryStats:
    """Node/edge/membership counts with exact-ratio averages."""
    bip = h.bipartite_edges
    return SummaryStats(
        n_nodes=h.n_nodes,
        n_edges=h.n_edges,
        bipartite_edges=bip,
        avg_degree=Fraction(bip, h.n_nodes),
        avg_edge_size=Fraction(bip, h.n_edges),
    )
