"""Brute-force reference implementations and a seeded random generator.

Everything here trades speed for auditability: coefficients are evaluated by
direct transcription of their defining formulas (nested loops and raw set
algebra, no shared indices with the optimized kernels), and the census
classifies every single node triple.  These are the oracles the fast paths
are tested against; they are also reachable from the CLI via ``--oracle``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .core import Hypergraph, build, check_node

# ---------------------------------------------------------------------------
# Seeded random hypergraphs

@dataclass(frozen=True)
class RandomHypergraphSpec:
    """Parameters for the uniform random generator; deterministic per seed."""

    n: int
    m: int
    min_size: int = 2
    max_size: int = 3
    seed: int = 0

    def validate(self) -> None:
        if not 2 <= self.min_size <= self.max_size <= self.n:
            raise ValueError("need 2 <= min_size <= max_size <= n")
        if self.m < 1:
            raise ValueError("need at least one edge")
        feasible = sum(comb(self.n, s)
                       for s in range(self.min_size, self.max_size + 1))
        if self.m > feasible:
            raise ValueError(
                f"{self.m} edges infeasible: only {feasible} distinct "
                f"subsets of sizes {self.min_size}..{self.max_size} exist")


def random_hypergraph(spec: RandomHypergraphSpec) -> Hypergraph:
    """Uniform edge sizes, uniform member subsets, dedup by regeneration.

    Connectedness is not guaranteed.  Uses the stdlib Mersenne Twister so a
    (seed, parameters) pair pins the output exactly.
    """
    spec.validate()
    rng = random.Random(spec.seed)
    edges: set[tuple[int, ...]] = set()
    budget = 200 * spec.m + 1000
    while len(edges) < spec.m:
        if budget == 0:
            raise RuntimeError("retry budget exhausted while deduplicating")
        budget -= 1
        size = rng.randint(spec.min_size, spec.max_size)
        edges.add(tuple(sorted(rng.sample(range(spec.n), size))))
    labels = [str(v) for v in range(spec.n)]
    return build([[labels[v] for v in e] for e in sorted(edges)])


# ---------------------------------------------------------------------------
# Literal formula transcriptions

def _edge_sets(h: Hypergraph) -> list[set[int]]:
    return [set(e) for e in h.edges]


def naive_weights(h: Hypergraph) -> dict[tuple[int, int], float]:
    """Pair weights by scanning every (pair, hyperedge) combination."""
    weights: dict[tuple[int, int], float] = {}
    esets = _edge_sets(h)
    for u in range(h.n_nodes):
        for v in range(u + 1, h.n_nodes):
            best = 0.0
            for e in esets:
                if u in e and v in e:
                    best = max(best, 1.0 / (len(e) - 1))
            if best > 0.0:
                weights[(u, v)] = best
    return weights


def _naive_neighborhood(h: Hypergraph, v: int) -> set[int]:
    out = {u for e in _edge_sets(h) if v in e for u in e}
    out.discard(v)
    return out


def naive_proposed(h: Hypergraph, v: int) -> float:
    check_node(h, v)
    weights = naive_weights(h)

    def w(a: int, b: int) -> float:
        if a == b:
            return 0.0
        return weights.get((min(a, b), max(a, b)), 0.0)

    nv = [u for u in range(h.n_nodes) if w(u, v) > 0.0]
    num = den = 0.0
    for i in nv:
        for j in nv:
            if i == j:
                continue
            num += w(i, v) * w(v, j) * w(i, j)
            den += w(i, v) * w(v, j)
    return num / den if den > 0.0 else 0.0


def naive_opsahl(h: Hypergraph, v: int) -> float:
    check_node(h, v)
    esets = _edge_sets(h)
    m = len(esets)
    total = closed = 0
    for i1 in range(m):
        e1 = esets[i1]
        if v not in e1:
            continue
        for i2 in range(m):
            if i2 == i1:
                continue
            e2 = esets[i2]
            if v not in e2:
                continue
            for u in e1:
                if u == v:
                    continue
                for w in e2:
                    if w == v or w == u:
                        continue
                    total += 1
                    for i3 in range(m):
                        if i3 in (i1, i2):
                            continue
                        if u in esets[i3] and w in esets[i3]:
                            closed += 1
                            break
    return closed / total if total else 0.0


def naive_eo(h: Hypergraph, ei: int, ej: int) -> float:
    """Extra overlap of two hyperedges from raw set algebra."""
    esets = _edge_sets(h)
    d_ij = esets[ei] - esets[ej]
    d_ji = esets[ej] - esets[ei]

    def common_neighborhood(nodes: set[int]) -> set[int]:
        if not nodes:
            return set()
        result: set[int] | None = None
        for u in nodes:
            nu = _naive_neighborhood(h, u)
            result = nu if result is None else result & nu
        return result if result is not None else set()

    numer = (len(common_neighborhood(d_ij) & d_ji)
             + len(common_neighborhood(d_ji) & d_ij))
    return numer / (len(d_ij) + len(d_ji))


def naive_zhou(h: Hypergraph, v: int) -> float:
    check_node(h, v)
    incident = [j for j, e in enumerate(_edge_sets(h)) if v in e]
    if len(incident) <= 1:
        return 0.0
    total = 0.0
    for ei, ej in combinations(incident, 2):
        total += naive_eo(h, ei, ej)
    return total / comb(len(incident), 2)


def naive_baseline(h: Hypergraph, v: int) -> float:
    check_node(h, v)
    esets = _edge_sets(h)

    def adj(a: int, b: int) -> int:
        if a == b:
            return 0
        return int(any(a in e and b in e for e in esets))

    n = h.n_nodes
    deg = sum(adj(u, v) for u in range(n))
    if deg <= 1:
        return 0.0
    twice_links = sum(adj(u, v) * adj(v, w) * adj(u, w)
                      for u in range(n) for w in range(n))
    return twice_links / (deg * (deg - 1))


def naive_cc(definition: str, h: Hypergraph, v: int) -> float:
    """Evaluate one coefficient definition at one node, brute force."""
    try:
        fn = {"proposed": naive_proposed, "opsahl": naive_opsahl,
              "zhou": naive_zhou, "baseline": naive_baseline}[definition]
    except KeyError:
        raise ValueError(f"unknown definition: {definition!r}") from None
    return fn(h, v)


# ---------------------------------------------------------------------------
# Exhaustive order-3 census

def _pattern_edges(h: Hypergraph, triple: tuple[int, int, int],
                   rule: str) -> tuple[bool, int]:
    """(triple edge present, pair-edge count) induced on the 3-node set."""
    tset = set(triple)
    has_triple = False
    pair_edges: set[frozenset[int]] = set()
    for e in _edge_sets(h):
        if rule == "subset":
            if e <= tset:
                if len(e) == 3:
                    has_triple = True
                elif len(e) == 2:
                    pair_edges.add(frozenset(e))
        elif rule == "intersect":
            cut = e & tset
            if len(cut) == 3:
                has_triple = True
            elif len(cut) == 2:
                pair_edges.add(frozenset(cut))
        else:
            raise ValueError(f"unknown induction rule: {rule!r}")
    return has_triple, len(pair_edges)


def naive_classify(h: Hypergraph, triple: tuple[int, int, int],
                   rule: str = "subset") -> int | None:
    """Motif class 1..6 of a node triple, or None when disconnected."""
    if len(set(triple)) != 3:
        raise ValueError("need three distinct nodes")
    for v in triple:
        check_node(h, v)
    has_triple, pairs = _pattern_edges(h, triple, rule)
    if has_triple:
        return 3 + pairs              # III..VI
    if pairs == 2:
        return 1                      # I: wedge
    if pairs == 3:
        return 2                      # II: triangle
    return None                       # 0 or 1 pair edges cannot connect 3 nodes


def naive_census(h: Hypergraph, rule: str = "subset") -> dict[int, int]:
    """Classify all C(N,3) node triples; keys 1..6, values counts."""
    counts = {k: 0 for k in range(1, 7)}
    for triple in combinations(range(h.n_nodes), 3):
        klass = naive_classify(h, triple, rule)
        if klass is not None:
            counts[klass] += 1
    return counts
