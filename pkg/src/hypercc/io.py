"""Dataset parsing, preprocessing and serialization.

Two input formats are supported:

* the three-file simplex layout used by the Benson dataset collection
  (``<name>-nverts.txt`` + ``<name>-simplices.txt``, with an optional
  ``<name>-times.txt`` that is ignored), and
* a plain hyperedge-list text format, one edge per line, labels separated
  by spaces, tabs or commas, ``#`` starting a comment.

Preprocessing applies, in order: in-edge label dedup, optional singleton
drop, duplicate-hyperedge removal (first occurrence kept) and largest
connected component extraction, and returns an exact accounting of what was
removed.  Node labels are opaque strings throughout, even when numeric.

Datasets are local files only; nothing here performs network access.  See
``scripts/dataset_urls.sh`` for the official download locations.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Hypergraph, build, largest_connected_component

log = logging.getLogger(__name__)


class ParseError(ValueError):
    """Malformed input file."""


class PreprocessError(ValueError):
    """Preprocessing produced an unusable hypergraph."""


@dataclass
class RawEdgeList:
    """Edges exactly as read: file order kept, duplicate edges kept."""

    edges: list[list[str]]
    source: str


@dataclass(frozen=True)
class PreprocessOptions:
    """Dedup is always on; singleton drop and LCC extraction are choices."""

    drop_singletons: bool = False
    take_lcc: bool = True


@dataclass(frozen=True)
class Provenance:
    """Exact accounting of every edge and node dropped on the way in."""

    raw_edge_count: int
    duplicates_removed: int
    singletons_removed: int
    edges_dropped_by_lcc: int
    nodes_dropped_by_lcc: int
    final_nodes: int
    final_edges: int
    final_bipartite_edges: int

    def balanced(self) -> bool:
        return (self.raw_edge_count
                == self.final_edges + self.duplicates_removed
                + self.singletons_removed + self.edges_dropped_by_lcc)

    def as_dict(self) -> dict:
        return {
            "raw_edge_count": self.raw_edge_count,
            "duplicates_removed": self.duplicates_removed,
            "singletons_removed": self.singletons_removed,
            "edges_dropped_by_lcc": self.edges_dropped_by_lcc,
            "nodes_dropped_by_lcc": self.nodes_dropped_by_lcc,
            "final_nodes": self.final_nodes,
            "final_edges": self.final_edges,
            "final_bipartite_edges": self.final_bipartite_edges,
        }


def parse_benson(nverts_path, simplices_path) -> RawEdgeList:
    """Split the simplex id stream into edges by the declared sizes."""
    sizes: list[int] = []
    with open(nverts_path) as f:
        for lineno, line in enumerate(f, start=1):
            text = line.strip()
            if not text:
                continue
            try:
                size = int(text)
            except ValueError:
                raise ParseError(
                    f"{nverts_path}:{lineno}: non-integer size {text!r}") from None
            if size < 1:
                raise ParseError(f"{nverts_path}:{lineno}: size must be >= 1")
            sizes.append(size)

    tokens: list[str] = []
    with open(simplices_path) as f:
        for lineno, line in enumerate(f, start=1):
            for tok in line.split():
                if not tok.lstrip("-").isdigit():
                    raise ParseError(
                        f"{simplices_path}:{lineno}: non-integer node id {tok!r}")
                tokens.append(tok)

    declared = sum(sizes)
    if len(tokens) < declared:
        raise ParseError(
            f"{simplices_path}: stream shorter than declared: "
            f"{len(tokens)} ids for {declared} declared memberships "
            f"(sizes from {nverts_path})")
    if len(tokens) > declared:
        raise ParseError(
            f"{simplices_path}: stream longer than declared: "
            f"{len(tokens)} ids for {declared} declared memberships")

    edges: list[list[str]] = []
    pos = 0
    for size in sizes:
        edges.append(tokens[pos:pos + size])
        pos += size
    return RawEdgeList(edges=edges, source=f"benson:{nverts_path}")


def parse_edgelist(path) -> RawEdgeList:
    """One hyperedge per line; in-edge duplicate labels collapse with a warning."""
    edges: list[list[str]] = []
    dup_lines = 0
    with open(path) as f:
        for line in f:
            text = line.split("#", 1)[0].replace(",", " ").strip()
            if not text:
                continue
            labels = text.split()
            unique = list(dict.fromkeys(labels))
            if len(unique) < len(labels):
                dup_lines += 1
            edges.append(unique)
    if dup_lines:
        log.warning("%s: collapsed duplicate labels within %d edge line(s)",
                    path, dup_lines)
    return RawEdgeList(edges=edges, source=f"edgelist:{path}")


def write_edgelist(edges: Iterable[Sequence[str]], path) -> None:
    """Hyperedge-list text, space separated, one edge per line."""
    with open(path, "w") as f:
        for edge in edges:
            f.write(" ".join(str(lab) for lab in edge))
            f.write("\n")


def write_benson(edges: Iterable[Sequence[str]], nverts_path, simplices_path) -> None:
    """Round-trip writer for the three-file simplex layout (no times file)."""
    edges = list(edges)
    with open(nverts_path, "w") as f:
        for edge in edges:
            f.write(f"{len(edge)}\n")
    with open(simplices_path, "w") as f:
        for edge in edges:
            for lab in edge:
                f.write(f"{lab}\n")


def hypergraph_edge_labels(h: Hypergraph) -> list[list[str]]:
    """Edges of ``h`` as label lists, in edge order."""
    return [[h.labels[v] for v in e] for e in h.edges]


def preprocess(raw: RawEdgeList,
               opts: PreprocessOptions = PreprocessOptions()) -> tuple[Hypergraph, Provenance]:
    """Clean a raw edge list into a simple hypergraph plus its provenance."""
    deduped = [list(dict.fromkeys(edge)) for edge in raw.edges]
    if any(len(edge) == 0 for edge in deduped):
        raise PreprocessError("edge with zero members")

    singletons_removed = 0
    if opts.drop_singletons:
        kept = [e for e in deduped if len(e) > 1]
        singletons_removed = len(deduped) - len(kept)
        deduped = kept

    if not deduped:
        raise PreprocessError("no nodes after preprocessing")
    h = build(deduped)
    duplicates_removed = h.duplicates_collapsed

    edges_dropped = nodes_dropped = 0
    if opts.take_lcc:
        reduced = largest_connected_component(h)
        edges_dropped = h.n_edges - reduced.n_edges
        nodes_dropped = h.n_nodes - reduced.n_nodes
        h = reduced

    prov = Provenance(
        raw_edge_count=len(raw.edges),
        duplicates_removed=duplicates_removed,
        singletons_removed=singletons_removed,
        edges_dropped_by_lcc=edges_dropped,
        nodes_dropped_by_lcc=nodes_dropped,
        final_nodes=h.n_nodes,
        final_edges=h.n_edges,
        final_bipartite_edges=h.bipartite_edges,
    )
    return h, prov
